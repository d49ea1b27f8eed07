"""Simplicial complexes by facets and the Stanley-Reisner correspondence."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from cliqueideals.bits import full, mask_of, submasks, vertices_of
from cliqueideals.errors import DegenerateError, UndefinedError
from cliqueideals.ideals import MonomialIdeal, alexander_dual


def maximalize(sets: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(sets), key=lambda s: -bin(s).count("1"))
    kept: list[int] = []
    for s in uniq:
        if not any(s & ~k == 0 for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 1..n given by its facets (bitsets, colex).

    ``facets == ()`` is the void complex; ``facets == (0,)`` is {∅}.
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int] | int]) -> SimplicialComplex:
        masks = [mask_of(f) for f in facets]
        if any(m >> n for m in masks):
            raise ValueError(f"facet outside vertex set 1..{n}")
        return cls(n, maximalize(masks))

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | int | None = None) -> SimplicialComplex:
        return cls(n, (full(n) if vertices is None else mask_of(vertices),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def dim(self) -> int:
        if not self.facets:
            raise UndefinedError("the void complex has no dimension")
        return max(bin(f).count("1") for f in self.facets) - 1

    def is_face(self, F: int) -> bool:
        return any(F & ~f == 0 for f in self.facets)

    def faces(self) -> Iterator[int]:
        """Every face exactly once (ascending order not guaranteed)."""
        seen: set[int] = set()
        for f in self.facets:
            for s in submasks(f):
                if s not in seen:
                    seen.add(s)
                    yield s

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [vertices_of(f) for f in self.facets]

    def __str__(self) -> str:
        if not self.facets:
            return "<void>"
        body = ", ".join("{" + ",".join(map(str, vertices_of(f))) + "}" for f in self.facets)
        return f"<{body}>"

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(vertices_of(f)) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict | str) -> SimplicialComplex:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_facets(data["n"], data["facets"])


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Δ_I: subsets of 1..n that contain no generator support.

    Facets are the complements of the minimal generators of the dual ideal.
    The unit ideal gives the void complex.
    """
    if I.is_unit:
        return SimplicialComplex(I.n, ())
    if I.is_zero:
        return SimplicialComplex.simplex(I.n)
    X = full(I.n)
    return SimplicialComplex(I.n, tuple(sorted(X & ~g for g in alexander_dual(I).gens)))


def stanley_reisner_ideal(D: SimplicialComplex) -> MonomialIdeal:
    """I_Δ, generated by the minimal non-faces."""
    if D.is_void:
        return MonomialIdeal(D.n, (0,))
    X = full(D.n)
    return alexander_dual(MonomialIdeal.from_supports(D.n, [X & ~f for f in D.facets]))


def _face_mask(D: SimplicialComplex, F: Iterable[int] | int) -> int:
    m = mask_of(F)
    if m >> D.n:
        raise ValueError(f"{vertices_of(m)} is outside vertex set 1..{D.n}")
    return m


def link(D: SimplicialComplex, F: Iterable[int] | int) -> SimplicialComplex:
    m = _face_mask(D, F)
    if not D.is_face(m):
        raise ValueError(f"{set(vertices_of(m)) or '{}'} is not a face")
    return SimplicialComplex(D.n, maximalize(f & ~m for f in D.facets if m & ~f == 0))


def deletion(D: SimplicialComplex, F: Iterable[int] | int) -> SimplicialComplex:
    m = _face_mask(D, F)
    return SimplicialComplex(D.n, maximalize(f & ~m for f in D.facets))


def induced_subcomplex(D: SimplicialComplex, W: int) -> SimplicialComplex:
    return SimplicialComplex(D.n, maximalize(f & W for f in D.facets))


@dataclass(frozen=True)
class DimPurity:
    dim: int
    pure: bool


def dimension_and_purity(D: SimplicialComplex) -> DimPurity:
    if D.is_void:
        raise UndefinedError("the void complex has no dimension")
    sizes = {bin(f).count("1") for f in D.facets}
    return DimPurity(max(sizes) - 1, len(sizes) == 1)


def dual_complex(D: SimplicialComplex) -> SimplicialComplex:
    """Δ^∨ = {X \\ F : F not in Δ}; its facets are complements of minimal non-faces."""
    I = stanley_reisner_ideal(D)
    if I.is_zero:
        raise DegenerateError("the full simplex has no non-faces; its dual is degenerate")
    X = full(D.n)
    return SimplicialComplex(D.n, tuple(sorted(X & ~g for g in I.gens)))
