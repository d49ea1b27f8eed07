"""Cross-validation suites: structural predictions against the homology oracle.

Each suite yields :class:`Outcome` records; the CLI aggregates them per
property and ``reproduce`` prints predicted-versus-oracle rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from cliqueideals.graphs import Graph, complement, cycle, is_chordal, path, random_chordal
from cliqueideals.homology import (
    GF2,
    QQ,
    FieldSpec,
    has_linear_resolution,
    hochster_betti,
    ideal_betti,
    reisner_cm_check,
)
from cliqueideals.ideals import MonomialIdeal, alexander_dual, clique_ideal, independence_ideal
from cliqueideals.resolutions import (
    betti_from_linear_quotients,
    chordal_splits,
    chordal_vertex_split,
    closed_form_invariants,
    cycle_decomposition,
    find_linear_quotients,
    path_betti_recursion,
    verify_betti_splitting,
)
from cliqueideals.shellings import (
    cycle_shelling,
    is_vertex_decomposable,
    path_shelling,
    shelling_to_linear_quotients,
    verify_shelling,
)
from cliqueideals.simplicial import dimension_and_purity, stanley_reisner_complex


@dataclass(frozen=True)
class Outcome:
    prop: str
    case: str
    ok: bool
    predicted: object = None
    observed: object = None


def _eq(prop: str, case: str, predicted: object, observed: object) -> Outcome:
    return Outcome(prop, case, predicted == observed, predicted, observed)


def chordal_corpus(count: int, seed: int, n_max: int = 9, n_min: int = 3) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        s = rng.randrange(2**31)
        out.append((f"chordal:{n}:{s}", random_chordal(n, s)))
    return out


def path_suite(n_max: int = 10, t_max: int = 4, field: FieldSpec = GF2) -> Iterator[Outcome]:
    for t in range(2, t_max + 1):
        for n in range(2 * t - 1, n_max + 1):
            case = f"path n={n} t={t}"
            cf = closed_form_invariants("path", n, t)
            P = path(n)
            K = clique_ideal(complement(P), t)
            J = independence_ideal(P, t)
            bK = hochster_betti(K, field)
            bJ = hochster_betti(J, field)
            yield _eq("pd(K_t(P_n^c)) = n-2t+1", case, cf.pd_clique_ideal, bK.pd)
            yield _eq("reg(R/K_t(P_n^c)) = t-1", case, cf.reg_quotient_clique, bK.quotient().reg)
            yield _eq("pd(R/J_t(P_n)) = t", case, cf.pd_quotient_independence, bJ.quotient().pd)
            yield Outcome(
                "J_t(P_n) is (n-2t+2)-linear", case, has_linear_resolution(bJ, cf.linear_degree)
            )
            D = stanley_reisner_complex(K)
            dp = dimension_and_purity(D)
            yield _eq("dim Δ_{K_t(P_n^c)} = 2t-3, pure", case, (cf.dim_complex, True), (dp.dim, dp.pure))
            order = path_shelling(n, t)
            yield Outcome("path_shelling is a shelling", case, verify_shelling(D, order))
            L = shelling_to_linear_quotients(D, order)
            yield _eq("LQ(J_t(P_n)) Betti = oracle", case, bJ, betti_from_linear_quotients(L))
            yield _eq("recursion Betti = oracle", case, bJ, path_betti_recursion(n, t))
            LK = find_linear_quotients(K)
            yield _eq("LQ(K_t(P_n^c)) Betti = oracle", case, bK, betti_from_linear_quotients(LK) if LK else None)
            yield Outcome("R/K_t(P_n^c) Cohen-Macaulay", case, reisner_cm_check(D, field))
        if t == 2:
            for n in range(3, n_max + 1):
                bI = hochster_betti(clique_ideal(complement(path(n)), 2), field)
                yield _eq("pd(I(P_n^c)) = n-3", f"path n={n}", n - 3, bI.pd)


def cycle_suite(n_max: int = 10, t_max: int = 4, field: FieldSpec = GF2) -> Iterator[Outcome]:
    for t in range(2, t_max + 1):
        for n in range(max(2 * t, 3), n_max + 1):
            case = f"cycle n={n} t={t}"
            cf = closed_form_invariants("cycle", n, t)
            C = cycle(n)
            K = clique_ideal(complement(C), t)
            J = independence_ideal(C, t)
            bK = hochster_betti(K, field)
            bJ = hochster_betti(J, field)
            yield _eq("pd(R/J_t(C_n)) = 2t-1", case, cf.pd_quotient_independence, bJ.quotient().pd)
            yield _eq("pd(K_t(C_n^c)) = n-2t+1", case, cf.pd_clique_ideal, bK.pd)
            yield Outcome(
                "J_t(C_n) is (n-2t+2)-linear", case, has_linear_resolution(bJ, cf.linear_degree)
            )
            D = stanley_reisner_complex(K)
            dp = dimension_and_purity(D)
            yield _eq("dim Δ_{K_t(C_n^c)} = 2t-3, pure", case, (cf.dim_complex, True), (dp.dim, dp.pure))
            order = cycle_shelling(n, t)
            yield Outcome("cycle_shelling is a shelling", case, verify_shelling(D, order))
            L = shelling_to_linear_quotients(D, order)
            yield _eq("LQ(J_t(C_n)) Betti = oracle", case, bJ, betti_from_linear_quotients(L))
            dec = cycle_decomposition(n, t)
            yield Outcome("pd(R/J_t(C_n)) <= decomposition bound", case, bJ.quotient().pd <= dec.pd_bound)
            yield Outcome("R/K_t(C_n^c) Cohen-Macaulay", case, reisner_cm_check(D, field))


def chordal_suite(count: int = 50, seed: int = 1, n_max: int = 9, ts: tuple[int, ...] = (2, 3)) -> Iterator[Outcome]:
    for name, G in chordal_corpus(count, seed, n_max):
        yield Outcome("random_chordal is chordal", name, is_chordal(G))
        for t in ts:
            K = clique_ideal(complement(G), t)
            if K.is_zero:
                continue
            case = f"{name} t={t}"
            tree = chordal_vertex_split(G, t, check=False)
            yield Outcome("vertex split verifies at every node", case, tree.verify())
            L = find_linear_quotients(K)
            yield Outcome("K_t(G^c) has linear quotients", case, L is not None)
            bK = hochster_betti(K)
            yield Outcome("K_t(G^c) is t-linear", case, has_linear_resolution(bK, t))
            yield _eq("reg(R/K_t(G^c)) = t-1", case, t - 1, bK.quotient().reg)
            if L is not None:
                yield _eq("LQ Betti = oracle", case, bK, betti_from_linear_quotients(L))
            J = independence_ideal(G, t)
            D = stanley_reisner_complex(J)
            yield Outcome("Δ_{J_t(G)} pure", case, dimension_and_purity(D).pure)
            yield Outcome("Δ_{J_t(G)} vertex decomposable", case, is_vertex_decomposable(D))
            yield Outcome("R/J_t(G) CM over GF(2)", case, reisner_cm_check(D, GF2))
            yield Outcome("R/J_t(G) CM over QQ", case, reisner_cm_check(D, QQ))
            yield _eq("pd(R/J_t(G)) = t", case, t, hochster_betti(J).quotient().pd)
            for sp in chordal_splits(G, t):
                sub = f"{case} u={sp.u} I={sp.I}"
                yield Outcome("Betti splitting identity", sub, verify_betti_splitting(sp.I, sp.J, sp.K, sp.u))
                if not sp.J.is_zero:
                    pd_i = ideal_betti(sp.I).pd
                    pd_j = ideal_betti(sp.J).pd
                    pd_k = ideal_betti(sp.K).pd
                    yield _eq("pd(I) = max(pd(J)+1, pd(K))", sub, max(pd_j + 1, pd_k), pd_i)
        if G.n >= 2 and len(G.edges) < G.n * (G.n - 1) // 2:
            I2 = clique_ideal(complement(G), 2)
            yield Outcome("I(G^c) 2-linear (chordal G)", name, has_linear_resolution(hochster_betti(I2), 2))


def duality_corpus(n_max: int = 8) -> list[tuple[str, MonomialIdeal]]:
    out = []
    for n in range(3, n_max + 1):
        for t in range(1, n // 2 + 2):
            for fam, G in (("path", path(n)), ("cycle", cycle(n))):
                K = clique_ideal(complement(G), t)
                if not K.is_zero:
                    out.append((f"K_{t}({fam}_{n}^c)", K))
                    out.append((f"J_{t}({fam}_{n})", alexander_dual(K)))
    return out


def duality_suite(n_max: int = 8, field: FieldSpec = GF2) -> Iterator[Outcome]:
    for name, I in duality_corpus(n_max):
        yield Outcome("Alexander dual is an involution", name, alexander_dual(alexander_dual(I)) == I)
        D = alexander_dual(I)
        if D.is_unit or I.is_unit:
            continue
        yield _eq(
            "pd(I^∨) = reg(R/I)",
            name,
            hochster_betti(I, field).quotient().reg,
            hochster_betti(D, field).pd,
        )


@dataclass(frozen=True)
class ConverseWitness:
    graph: Graph
    ideal: MonomialIdeal
    order: object

    def __str__(self) -> str:
        return f"G with edges {list(self.graph.edges)}: K_3(G^c) = {self.ideal} has linear quotients {self.order}"


def find_converse_counterexample(
    n_max: int = 6, t: int = 3, min_generators: int = 2
) -> ConverseWitness | None:
    """First non-chordal G (by n, then edge bitmask) whose K_t(G^c), with at
    least ``min_generators`` generators, nevertheless has linear quotients."""
    for n in range(4, n_max + 1):
        pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        for code in range(1 << len(pairs)):
            G = Graph.from_edges(n, [e for k, e in enumerate(pairs) if code >> k & 1])
            if is_chordal(G):
                continue
            K = clique_ideal(complement(G), t)
            if len(K.gens) < min_generators:
                continue
            L = find_linear_quotients(K)
            if L is not None:
                return ConverseWitness(G, K, L)
    return None


SUITES = {
    "path": path_suite,
    "cycle": cycle_suite,
    "chordal": chordal_suite,
    "duality": duality_suite,
}


@dataclass(frozen=True)
class Row:
    family: str
    n: int
    t: int
    statement: str
    predicted: object
    observed: object
    source: str

    @property
    def ok(self) -> bool:
        return self.predicted == self.observed

    def __str__(self) -> str:
        mark = "ok" if self.ok else "MISMATCH"
        return (
            f"{self.family} n={self.n} t={self.t}: {self.statement} = {self.predicted} predicted / "
            f"{self.observed} {self.source}  [{mark}]"
        )


def reproduce_rows(n_max: int = 9, t_max: int = 4) -> list[Row]:
    """One row per closed-form statement and instance, predicted vs oracle."""
    rows: list[Row] = []
    for fam, make in (("path", path), ("cycle", cycle)):
        for t in range(2, t_max + 1):
            for n in range(3, n_max + 1):
                cf = closed_form_invariants(fam, n, t)
                if not cf.nonzero:
                    continue
                G = make(n)
                K = clique_ideal(complement(G), t)
                J = independence_ideal(G, t)
                bK = hochster_betti(K)
                bJ = hochster_betti(J)
                D = stanley_reisner_complex(K)

                def row(stmt: str, pred: object, obs: object, src: str = "oracle") -> None:
                    rows.append(Row(fam, n, t, stmt, pred, obs, src))

                row("pd(K)", cf.pd_clique_ideal, bK.pd)
                row("reg(R/K)", cf.reg_quotient_clique, bK.quotient().reg)
                row("dim Δ", cf.dim_complex, dimension_and_purity(D).dim, "computed")
                row("R/K CM", True, reisner_cm_check(D), "oracle")
                row("J linear degree", cf.linear_degree, bJ.reg if has_linear_resolution(bJ, bJ.reg) else None)
                row("pd(R/J)", cf.pd_quotient_independence, bJ.quotient().pd)
                shelling = path_shelling(n, t) if fam == "path" else cycle_shelling(n, t)
                row("shelling valid", True, verify_shelling(D, shelling), "verified")
    return rows
