"""Squarefree monomial ideals stored by the supports of their minimal generators."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from cliqueideals.bits import full, iter_bits, mask_of, monomial_str, submasks, vertices_of
from cliqueideals.errors import UndefinedError, check_size
from cliqueideals.graphs import Graph, clique_masks, complement


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of k[x1..xn] with canonical minimal generators ``gens`` (bitsets, colex).

    ``gens == ()`` is the zero ideal and ``gens == (0,)`` the unit ideal.
    """

    n: int
    gens: tuple[int, ...]

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int] | int]) -> MonomialIdeal:
        return minimalize([mask_of(s) for s in supports], n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def supports(self) -> list[tuple[int, ...]]:
        return [vertices_of(g) for g in self.gens]

    def degrees(self) -> set[int]:
        return {bin(g).count("1") for g in self.gens}

    def contains_monomial(self, m: int) -> bool:
        return any(g & ~m == 0 for g in self.gens)

    def contains(self, other: MonomialIdeal) -> bool:
        """``other`` is a subideal of ``self``."""
        return all(self.contains_monomial(g) for g in other.gens)

    def times(self, v: int) -> MonomialIdeal:
        """The ideal x_v * I (v is 1-based)."""
        bit = 1 << (v - 1)
        return minimalize([g | bit for g in self.gens], self.n)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(vertices_of(g)) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict | str) -> MonomialIdeal:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_supports(data["n"], data["gens"])


def minimalize(gens: Iterable[int], n: int | None = None) -> MonomialIdeal:
    """Drop non-minimal and duplicate generators and sort colex."""
    uniq = sorted(set(gens), key=lambda g: (bin(g).count("1"), g))
    if n is None:
        n = max((g.bit_length() for g in uniq), default=0)
    elif any(g >> n for g in uniq):
        raise ValueError(f"generator outside the {n}-variable ring")
    kept: list[int] = []
    for g in uniq:
        if not any(k & ~g == 0 for k in kept):
            kept.append(g)
    kept.sort()
    return MonomialIdeal(n, tuple(kept))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.n != J.n:
        raise ValueError(f"ambient rings differ: {I.n} vs {J.n} variables")
    return minimalize(I.gens + J.gens, I.n)


def intersect_with_prime(I: MonomialIdeal, prime: int) -> MonomialIdeal:
    """I intersected with the prime generated by the variables in ``prime``."""
    out = []
    for g in I.gens:
        if g & prime:
            out.append(g)
        else:
            out.extend(g | b for b in iter_bits(prime))
    return minimalize(out, I.n)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the primes (x_i : i in supp g) over the minimal generators g."""
    if I.is_zero:
        raise UndefinedError("the Alexander dual of the zero ideal is undefined")
    acc = MonomialIdeal(I.n, (0,))
    for g in I.gens:
        acc = intersect_with_prime(acc, g)
    return acc


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal.from_supports(G.n, [(i, j) for i, j in G.edges])


def clique_ideal(G: Graph, t: int) -> MonomialIdeal:
    """K_t(G); t = 0 gives the unit ideal (the empty clique)."""
    return MonomialIdeal(G.n, tuple(clique_masks(G, t)))


def independence_ideal(G: Graph, t: int) -> MonomialIdeal:
    """J_t(G), the dual of K_t(G^c); the zero ideal when G has no independent t-set."""
    if t < 1:
        raise ValueError("t must be at least 1")
    K = clique_ideal(complement(G), t)
    if K.is_zero:
        return K
    return alexander_dual(K)


def independence_ideal_by_intersection(G: Graph, t: int) -> MonomialIdeal:
    """J_t(G) straight from its definition, by scanning all 2^n squarefree monomials.

    A squarefree monomial lies in the intersection of the primes (x_i : i in S)
    exactly when its support meets every independent t-set S.
    """
    check_size(G.n, "graph")
    indep = clique_masks(complement(G), t)
    if not indep:
        return MonomialIdeal(G.n, ())
    members = [m for m in submasks(full(G.n)) if all(m & s for s in indep)]
    return minimalize(members, G.n)
