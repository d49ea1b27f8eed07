"""Shellings: verification, the explicit orders for path and cycle complexes,
the passage to linear quotients of the dual ideal, exhaustive search, and
vertex decomposability."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Sequence

from cliqueideals.bits import full, mask_of, vertices_of
from cliqueideals.errors import DegenerateError, check_size
from cliqueideals.resolutions import LinearQuotientOrder
from cliqueideals.simplicial import SimplicialComplex, maximalize

MAX_SEARCH_FACETS = 12


def _addable(prev: Sequence[int], F: int) -> bool:
    """Can F follow the facets in ``prev``?  For every earlier facet E some
    v in F \\ E must have F \\ G = {v} for an earlier facet G."""
    ridge_vertices = 0
    for G in prev:
        d = F & ~G
        if d and d & (d - 1) == 0:
            ridge_vertices |= d
    return all((F & ~E) & ridge_vertices for E in prev)


def verify_shelling(D: SimplicialComplex, order: Sequence[int | Sequence[int]]) -> bool:
    masks = [mask_of(F) for F in order]
    if sorted(masks) != sorted(D.facets) or len(set(masks)) != len(masks):
        raise ValueError("the order is not a permutation of the facets")
    return all(_addable(masks[:j], masks[j]) for j in range(1, len(masks)))


def _path_shelling_seq(seq: tuple[int, ...], t: int) -> list[int]:
    """Recursive shelling of Δ_{K_t(P^c)} for the path visiting ``seq`` (bit positions)."""
    n = len(seq)
    if t == 1:
        return [0]
    if n < 2 * t - 1:
        m = 0
        for v in seq:
            m |= 1 << v
        return [m]
    tail = (1 << seq[-2]) | (1 << seq[-1])
    head = _path_shelling_seq(seq[:-1], t)
    return head + [G | tail for G in _path_shelling_seq(seq[:-2], t - 1)]


def path_shelling(n: int, t: int) -> list[int]:
    """Shelling of the Stanley-Reisner complex of K_t(P_n^c) (facets as bitsets):
    facets of the n-1 complex first, then those of the (n-2, t-1) complex
    each joined with {x_{n-1}, x_n}."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if n < 2 * t - 1:
        raise ValueError(f"K_{t}(P_{n}^c) is zero: need n >= 2t-1")
    return _path_shelling_seq(tuple(range(n)), t)


def cycle_shelling(n: int, t: int) -> list[int]:
    """Shelling of the complex of K_t(C_n^c): concatenate the path shellings of
    C_n minus x_i for i = 1..n, keeping the first occurrence of each facet."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if n < 2 * t or n < 3:
        raise ValueError(f"K_{t}(C_{n}^c) is zero: need n >= 2t")
    out: list[int] = []
    seen: set[int] = set()
    for i in range(n):
        seq = tuple(range(i + 1, n)) + tuple(range(i))
        for F in _path_shelling_seq(seq, t):
            if F not in seen:
                seen.add(F)
                out.append(F)
    return out


def shelling_to_linear_quotients(D: SimplicialComplex, order: Sequence[int | Sequence[int]]) -> LinearQuotientOrder:
    """Order x^{F_1^c} < ... < x^{F_m^c} on the generators of I_{Δ^∨}."""
    masks = [mask_of(F) for F in order]
    if not verify_shelling(D, masks):
        raise ValueError("not a shelling order")
    X = full(D.n)
    if any(F == X for F in masks):
        raise DegenerateError("a facet equal to the whole vertex set dualizes to the unit ideal")
    L = LinearQuotientOrder.from_order(D.n, [X & ~F for F in masks])
    return L


def find_shelling(D: SimplicialComplex, max_facets: int = MAX_SEARCH_FACETS) -> list[int] | None:
    """A shelling order, or None if there is none.

    Addability of a facet depends only on the set of facets already placed, so
    memoizing dead sets makes the backtracking exhaustive over 2^m states.
    """
    facets = D.facets
    m = len(facets)
    if m > max_facets:
        raise ValueError(f"{m} facets exceeds the search cap of {max_facets}")
    if m == 0:
        return None
    dead: set[int] = set()
    order: list[int] = []

    def extend(chosen: int) -> bool:
        if len(order) == m:
            return True
        if chosen in dead:
            return False
        for k in range(m):
            if chosen >> k & 1 or not _addable(order, facets[k]):
                continue
            order.append(facets[k])
            if extend(chosen | 1 << k):
                return True
            order.pop()
        dead.add(chosen)
        return False

    return list(order) if extend(0) else None


def _deletion_facets(facets: tuple[int, ...], v: int) -> tuple[int, ...]:
    return maximalize(F & ~v for F in facets)


def _link_facets(facets: tuple[int, ...], v: int) -> tuple[int, ...]:
    return maximalize(F & ~v for F in facets if F & v)


@lru_cache(maxsize=100_000)
def _vd(facets: tuple[int, ...]) -> bool:
    if len(facets) <= 1:
        return True
    V = 0
    for F in facets:
        V |= F
    fset = set(facets)
    while V:
        v = V & -V
        V ^= v
        dl = _deletion_facets(facets, v)
        if not all(F in fset for F in dl):
            continue
        if _vd(_link_facets(facets, v)) and _vd(dl):
            return True
    return False


def is_vertex_decomposable(D: SimplicialComplex) -> bool:
    """Recursive search over shedding vertices in ascending order."""
    check_size(D.n, "complex")
    if D.is_void:
        raise ValueError("the void complex is not considered")
    return _vd(D.facets)


def shelling_to_json(n: int, order: Sequence[int]) -> dict:
    return {"n": n, "order": [list(vertices_of(F)) for F in order]}


def shelling_from_json(data: dict | str) -> tuple[SimplicialComplex, list[int]]:
    if isinstance(data, str):
        data = json.loads(data)
    order = [mask_of(F) for F in data["order"]]
    return SimplicialComplex.from_facets(data["n"], order), order
