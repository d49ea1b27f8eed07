"""Structural Betti machinery: linear quotients, chordal vertex splittings,
Betti splittings, the J_t(P_n) recursion and the closed-form invariants of
path and cycle families."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterator

from cliqueideals.bits import full, mask_of, monomial_str, vertices_of
from cliqueideals.errors import DegenerateError, NotChordalError
from cliqueideals.graphs import (
    Graph,
    complement,
    cycle,
    delete_vertices,
    induced,
    is_chordal,
    lowest_simplicial_vertex,
)
from cliqueideals.homology import BettiTable, ideal_betti
from cliqueideals.ideals import MonomialIdeal, clique_ideal, ideal_sum, minimalize

MAX_LQ_GENERATORS = 20


# ---------------------------------------------------------------- linear quotients


def colon_set(prefix: list[int] | tuple[int, ...], f: int) -> int | None:
    """Variables generating (prefix) : f, as a bitset, or None if that colon
    ideal is not generated by variables.

    (g) : f is generated by x^{g \\ f}; the colon against the prefix is linear
    iff each such quotient is divisible by a single-variable quotient.
    """
    singles = 0
    quotients = []
    for g in prefix:
        q = g & ~f
        if q & (q - 1) == 0:
            singles |= q
        else:
            quotients.append(q)
    for q in quotients:
        if not q & singles:
            return None
    return singles


@dataclass(frozen=True)
class LinearQuotientOrder:
    n: int
    order: tuple[int, ...]
    sets: tuple[int, ...]

    @classmethod
    def from_order(cls, n: int, order: list[int] | tuple[int, ...]) -> LinearQuotientOrder:
        """Compute the set_I of each generator; raise if the order is not linear."""
        sets = []
        for k, f in enumerate(order):
            s = colon_set(order[:k], f)
            if s is None:
                raise ValueError(f"colon at {monomial_str(f)} is not generated by variables")
            sets.append(s)
        return cls(n, tuple(order), tuple(sets))

    def is_valid(self) -> bool:
        try:
            other = LinearQuotientOrder.from_order(self.n, self.order)
        except ValueError:
            return False
        return other.sets == self.sets and (not self.sets or self.sets[0] == 0)

    @property
    def ideal(self) -> MonomialIdeal:
        return minimalize(self.order, self.n)

    def set_sizes(self) -> list[int]:
        return [bin(s).count("1") for s in self.sets]

    def __str__(self) -> str:
        parts = []
        for f, s in zip(self.order, self.sets):
            vs = ",".join(f"x{v}" for v in vertices_of(s))
            parts.append(f"{monomial_str(f)} [{vs}]")
        return " < ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": [list(vertices_of(f)) for f in self.order],
            "sets": [list(vertices_of(s)) for s in self.sets],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> LinearQuotientOrder:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data["n"],
            tuple(mask_of(f) for f in data["order"]),
            tuple(mask_of(s) for s in data["sets"]),
        )


class SearchLimitError(ValueError):
    """The order search gave up without a proof of absence."""


def find_linear_quotients(
    I: MonomialIdeal,
    max_generators: int = MAX_LQ_GENERATORS,
    budget: int = 200_000,
) -> LinearQuotientOrder | None:
    """An order of linear quotients, or None when none exists.

    Depth-first extension with backtracking.  Whether a prefix can be completed
    depends only on its set of generators, so dead prefix sets are memoized and
    the search is exhaustive in at most 2^m states.  None is only returned as a
    proof for m <= ``max_generators``; larger ideals are searched with a state
    budget and raise SearchLimitError if it runs out.
    """
    if I.is_zero or I.is_unit:
        raise DegenerateError("linear quotients are sought for proper nonzero ideals")
    gens = I.gens
    m = len(gens)
    limited = m > max_generators
    dead: set[int] = set()
    order: list[int] = []
    visited = 0

    def extend(chosen: int) -> bool:
        nonlocal visited
        if len(order) == m:
            return True
        if chosen in dead:
            return False
        visited += 1
        if limited and visited > budget:
            raise SearchLimitError(
                f"{m} generators exceeds the exhaustive cap of {max_generators} "
                f"and no order was found within {budget} states"
            )
        for k in range(m):
            if chosen >> k & 1:
                continue
            if colon_set(order, gens[k]) is None:
                continue
            order.append(gens[k])
            if extend(chosen | 1 << k):
                return True
            order.pop()
        dead.add(chosen)
        return False

    if extend(0):
        return LinearQuotientOrder.from_order(I.n, order)
    if limited:
        raise SearchLimitError(f"no order among {m} generators, beyond the exhaustive cap of {max_generators}")
    return None


def betti_from_linear_quotients(L: LinearQuotientOrder) -> BettiTable:
    """β_{i,j}(I) = Σ over generators f of degree j - i of C(|set(f)|, i)."""
    out: dict[tuple[int, int], int] = {}
    for f, s in zip(L.order, L.sets):
        d = bin(f).count("1")
        k = bin(s).count("1")
        for i in range(k + 1):
            out[(i, d + i)] = out.get((i, d + i), 0) + comb(k, i)
    return BettiTable(out, "ideal")


# ---------------------------------------------------------------- vertex splitting


@dataclass(frozen=True)
class VertexSplitTree:
    """I = x * I_1 + I_2 at each inner node; leaves are zero, unit or principal."""

    ideal: MonomialIdeal
    vertex: int | None = None
    left: VertexSplitTree | None = None   # I_1
    right: VertexSplitTree | None = None  # I_2

    @property
    def is_leaf(self) -> bool:
        return self.vertex is None

    def nodes(self) -> Iterator[VertexSplitTree]:
        yield self
        if not self.is_leaf:
            yield from self.left.nodes()
            yield from self.right.nodes()

    def check_node(self) -> list[str]:
        """Violations of the splitting conditions at this node (empty when fine)."""
        I = self.ideal
        if self.is_leaf:
            ok = I.is_zero or I.is_unit or I.is_principal
            return [] if ok else [f"leaf {I} is not zero, unit or principal"]
        x = self.vertex
        bit = 1 << (x - 1)
        I1, I2 = self.left.ideal, self.right.ideal
        problems = []
        if any(g & bit for g in I1.gens + I2.gens):
            problems.append(f"x{x} occurs in I_1 or I_2")
        xI1 = I1.times(x)
        if ideal_sum(xI1, I2) != I:
            problems.append(f"x{x}*I_1 + I_2 != I at {I}")
        if not I1.contains(I2):
            problems.append(f"I_2 not contained in I_1 at {I}")
        if set(xI1.gens) & set(I2.gens) or set(xI1.gens) | set(I2.gens) != set(I.gens):
            problems.append(f"G(I) is not the disjoint union of G(x*I_1) and G(I_2) at {I}")
        return problems

    def verify(self) -> bool:
        return all(not node.check_node() for node in self.nodes())

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth(), self.right.depth())


def chordal_vertex_split(G: Graph, t: int, check: bool = True) -> VertexSplitTree:
    """Split K_t(G^c) = K_t((G\\u)^c) + u K_{t-1}((G\\N[u])^c) recursively,
    always at the lowest-index simplicial vertex u."""
    if not is_chordal(G):
        raise NotChordalError("vertex splitting of K_t(G^c) needs a chordal graph")
    I = clique_ideal(complement(G), t)
    if I.is_zero:
        raise DegenerateError(f"K_{t}(G^c) is the zero ideal")
    tree = _split(G, t)
    if check:
        for node in tree.nodes():
            problems = node.check_node()
            if problems:
                raise AssertionError("; ".join(problems))
    return tree


def _split(G: Graph, t: int) -> VertexSplitTree:
    # principal ideals are split too, down to zero/unit leaves
    I = clique_ideal(complement(G), t)
    if I.is_zero or I.is_unit:
        return VertexSplitTree(I)
    u = lowest_simplicial_vertex(G)
    ubit = 1 << (u - 1)
    rest = delete_vertices(G, ubit)
    H = delete_vertices(G, G.adj[u - 1] | ubit)
    return VertexSplitTree(I, u, _split(H, t - 1), _split(rest, t))


def linear_quotients_from_split(tree: VertexSplitTree) -> LinearQuotientOrder:
    """Order of linear quotients read off a vertex splitting I = x I_1 + I_2:
    x times the order of I_1, followed by the order of I_2."""
    def gens_in_order(node: VertexSplitTree) -> list[int]:
        if node.is_leaf:
            return list(node.ideal.gens)
        bit = 1 << (node.vertex - 1)
        return [g | bit for g in gens_in_order(node.left)] + gens_in_order(node.right)

    return LinearQuotientOrder.from_order(tree.ideal.n, gens_in_order(tree))


@dataclass(frozen=True)
class ChordalSplit:
    """One level of the splitting: I = J + u K."""

    u: int
    I: MonomialIdeal
    J: MonomialIdeal
    K: MonomialIdeal


def chordal_splits(G: Graph, t: int) -> list[ChordalSplit]:
    """Every split node of the tree as (u, I, J = I_2, K = I_1)."""
    tree = chordal_vertex_split(G, t)
    return [
        ChordalSplit(node.vertex, node.ideal, node.right.ideal, node.left.ideal)
        for node in tree.nodes()
        if not node.is_leaf
    ]


def verify_betti_splitting(
    I: MonomialIdeal,
    J: MonomialIdeal,
    K: MonomialIdeal,
    u: int,
    betti: Callable[[MonomialIdeal], BettiTable] = ideal_betti,
) -> bool:
    """Check I = J + u K and β_{i,j}(I) = β_{i,j}(J) + β_{i-1,j-1}(J) + β_{i,j-1}(K)."""
    uK = K.times(u)
    if set(J.gens) & set(uK.gens):
        raise ValueError("G(J) and G(uK) overlap; not a disjoint generator splitting")
    if ideal_sum(J, uK) != I or set(J.gens) | set(uK.gens) != set(I.gens):
        return False
    bI, bJ, bK = betti(I), betti(J), betti(K)
    keys = set(bI.entries)
    keys |= set(bJ.entries)
    keys |= {(i + 1, j + 1) for i, j in bJ.entries}
    keys |= {(i, j + 1) for i, j in bK.entries}
    return all(bI[i, j] == bJ[i, j] + bJ[i - 1, j - 1] + bK[i, j - 1] for i, j in keys)


# ---------------------------------------------------------------- path recursion


_UNIT_TABLE = BettiTable({(0, 0): 1}, "ideal")


@lru_cache(maxsize=None)
def _path_table(n: int, t: int) -> BettiTable:
    if t == 1:
        return BettiTable({(0, n): 1}, "ideal")
    if n < 2 * t - 1:
        # J_t(P_n) for n = 2t-2 arises as the empty-order term: the facet
        # {x_1..x_n} of the simplex contributes the generator 1.
        return _UNIT_TABLE
    prev = _path_table(n - 1, t)
    sub = _path_table(n - 2, t - 1)
    out: dict[tuple[int, int], int] = {}
    for (i, j), b in prev.entries.items():
        out[(i, j + 1)] = out.get((i, j + 1), 0) + b
    for (i, j), b in sub.entries.items():
        out[(i, j)] = out.get((i, j), 0) + b
        out[(i + 1, j + 1)] = out.get((i + 1, j + 1), 0) + b
    return BettiTable(out, "ideal")


def path_betti_recursion(n: int, t: int) -> BettiTable:
    """Betti table of J_t(P_n) from
    β_{i,j}(J_t(P_n)) = β_{i,j-1}(J_t(P_{n-1})) + β_{i,j}(J_{t-1}(P_{n-2})) + β_{i-1,j-1}(J_{t-1}(P_{n-2}))."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if n < 2 * t - 1:
        raise ValueError(f"J_{t}(P_{n}) is zero: need n >= 2t-1 = {2 * t - 1}")
    return _path_table(n, t)


# ---------------------------------------------------------------- closed forms


@dataclass(frozen=True)
class ClosedForm:
    family: str
    n: int
    t: int
    nonzero: bool
    reg_quotient_clique: int | None
    pd_clique_ideal: int | None
    pd_quotient_independence: int | None
    linear_degree: int | None
    dim_complex: int


def closed_form_invariants(family: str, n: int, t: int) -> ClosedForm:
    """Predicted invariants of K_t(G^c) and J_t(G) for G = P_n or C_n."""
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    if family == "path":
        threshold = 2 * t - 1
    elif family == "cycle":
        threshold = 2 * t
    else:
        raise ValueError(f"family must be 'path' or 'cycle', got {family!r}")
    if n < threshold:
        return ClosedForm(family, n, t, False, None, None, None, None, n - 1)
    if family == "path":
        reg_q = t - 1
        pd_q_j = t
    else:
        # reg(R/K_t(C_n^c)) = pd(J_t(C_n)) = (2t - 1) - 1
        reg_q = 2 * t - 2
        pd_q_j = 2 * t - 1
    return ClosedForm(family, n, t, True, reg_q, n - 2 * t + 1, pd_q_j, n - 2 * t + 2, 2 * t - 3)


@dataclass(frozen=True)
class CycleDecomposition:
    I: MonomialIdeal
    left: MonomialIdeal
    right: MonomialIdeal
    pd_bound: int


def cycle_decomposition(n: int, t: int) -> CycleDecomposition:
    """K_t(C_n^c) = x_n K_{t-1}(L^c) + K_t(P_{n-1}^c), with L the path on x_2..x_{n-2}."""
    if n < 2 * t or n < 3:
        raise ValueError(f"need n >= 2t (and n >= 3), got n={n}, t={t}")
    C = cycle(n)
    I = clique_ideal(complement(C), t)
    L = induced(C, full(n) & ~mask_of([1, n - 1, n]))
    left = clique_ideal(complement(L), t - 1).times(n)
    right = clique_ideal(complement(induced(C, full(n - 1))), t)
    if ideal_sum(left, right) != I:
        raise AssertionError(f"cycle decomposition failed for n={n}, t={t}")
    return CycleDecomposition(I, left, right, 2 * t - 1)
