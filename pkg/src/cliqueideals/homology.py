"""Exact reduced simplicial homology and brute-force graded Betti numbers.

Everything here is the ground-truth oracle: Betti numbers come from Hochster's
formula, summing reduced homology of induced subcomplexes, with ranks from
exact elimination over GF(p) or over the rationals (fraction-free integer
row reduction).  No floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from cliqueideals.bits import full, submasks
from cliqueideals.errors import UndefinedError, check_size
from cliqueideals.ideals import MonomialIdeal
from cliqueideals.simplicial import SimplicialComplex, link


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: 0 for the rationals, otherwise a prime p for GF(p)."""

    characteristic: int = 2

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.characteristic}")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        text = text.strip().lower()
        if text.startswith("p:"):
            text = text[2:]
        return cls(int(text))

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


GF2 = FieldSpec(2)
QQ = FieldSpec(0)


# ---------------------------------------------------------------- ranks


def _rank_gf2(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = r
                break
            r ^= p
    return len(pivots)


def _rank_mod_p(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def _rank_rational(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q by fraction-free integer elimination (rows rescaled by content)."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if r[c] < 0:
                    g = -g
                pivots[c] = {k: v // g for k, v in r.items()}
                break
            a, b = piv[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            r = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)


def _boundary_rank(faces: list[int], lower_index: dict[int, int], field: FieldSpec) -> int:
    """Rank of the boundary map from the given faces (all of one size) to the size below."""
    p = field.characteristic
    if p == 2:
        rows = []
        for f in faces:
            r = 0
            s = f
            while s:
                low = s & -s
                r |= 1 << lower_index[f ^ low]
                s ^= low
            rows.append(r)
        return _rank_gf2(rows)
    drows = []
    for f in faces:
        r = {}
        s = f
        sign = 1
        while s:
            low = s & -s
            r[lower_index[f ^ low]] = sign
            sign = -sign
            s ^= low
        drows.append(r)
    if p == 0:
        return _rank_rational(drows)
    return _rank_mod_p(drows, p)


def _reduced_homology(faces: Iterable[int], field: FieldSpec) -> list[int]:
    """Reduced Betti numbers of the complex with the given face set (must contain 0).

    Returns ranks for dimensions -1, 0, ..., top.
    """
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    top = max(by_size)
    counts = [len(by_size.get(k, ())) for k in range(top + 1)]
    ranks = [0] * (top + 2)  # ranks[k]: boundary from size-k faces, ranks[0] = 0
    for k in range(1, top + 1):
        lower = by_size.get(k - 1, [])
        idx = {f: i for i, f in enumerate(lower)}
        ranks[k] = _boundary_rank(by_size.get(k, []), idx, field)
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]


@lru_cache(maxsize=200_000)
def _homology_of_facets(facets: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    seen: set[int] = set()
    for f in facets:
        seen.update(submasks(f))
    return tuple(_reduced_homology(seen, field))


def reduced_homology_ranks(D: SimplicialComplex, field: FieldSpec = GF2) -> list[int]:
    """Ranks of reduced homology of D over ``field``, indexed by dimension -1..dim(D)."""
    if D.is_void:
        raise UndefinedError("reduced homology of the void complex is not computed")
    check_size(D.n, "complex")
    return list(_homology_of_facets(D.facets, field))


# ---------------------------------------------------------------- Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers; ``entries`` maps (i, j) to a positive count.

    ``subject`` is ``"ideal"`` (the table of I) or ``"quotient"`` (of R/I).
    """

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)
    subject: str = "ideal"

    def __post_init__(self) -> None:
        if self.subject not in ("ideal", "quotient"):
            raise ValueError(f"unknown subject {self.subject!r}")
        clean = {}
        for (i, j), b in sorted(self.entries.items()):
            if b < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if b:
                clean[(i, j)] = b
        object.__setattr__(self, "entries", clean)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.subject == other.subject and dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash((self.subject, tuple(sorted(self.entries.items()))))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self.entries)

    @property
    def reg(self) -> int:
        if not self.entries:
            raise UndefinedError("regularity of the zero module is undefined")
        return max(j - i for i, j in self.entries)

    @property
    def pd(self) -> int:
        if not self.entries:
            raise UndefinedError("projective dimension of the zero module is undefined")
        return max(i for i, _ in self.entries)

    def quotient(self) -> BettiTable:
        """Table of R/I from the table of I (shift i by one, add β_{0,0} = 1)."""
        if self.subject == "quotient":
            return self
        out = {(0, 0): 1}
        for (i, j), b in self.entries.items():
            out[(i + 1, j)] = out.get((i + 1, j), 0) + b
        return BettiTable(out, "quotient")

    def ideal(self) -> BettiTable:
        if self.subject == "ideal":
            return self
        out = {(i - 1, j): b for (i, j), b in self.entries.items() if i > 0}
        return BettiTable(out, "ideal")

    def alternating_sums(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, j), b in self.entries.items():
            out[j] = out.get(j, 0) + (-1) ** i * b
        return {j: v for j, v in out.items() if v}

    def render(self) -> str:
        """Macaulay2-style diagram: columns are homological degree i, rows j - i."""
        if not self.entries:
            return "(zero table)"
        pds = max(i for i, _ in self.entries)
        lo = min(j - i for i, j in self.entries)
        hi = max(j - i for i, j in self.entries)
        width = max(len(str(b)) for b in self.entries.values())
        width = max(width, len(str(pds)), 1)
        rows_lbl = [f"{r}:" for r in range(lo, hi + 1)]
        lw = max(len(s) for s in rows_lbl)
        lines = [" " * (lw + 1) + " ".join(str(i).rjust(width) for i in range(pds + 1))]
        for r, lbl in zip(range(lo, hi + 1), rows_lbl):
            cells = []
            for i in range(pds + 1):
                b = self.entries.get((i, i + r), 0)
                cells.append((str(b) if b else ".").rjust(width))
            lines.append(lbl.rjust(lw) + " " + " ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "entries": [{"i": i, "j": j, "b": b} for (i, j), b in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> BettiTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(e["i"], e["j"]): e["b"] for e in data["entries"]}, data["subject"])


@dataclass(frozen=True)
class RegPd:
    reg: int
    pd: int


def reg_pd_from_table(B: BettiTable, subject: str | None = None) -> RegPd:
    """reg and pd of the table's module, or of the other subject if requested."""
    if not B.entries:
        raise UndefinedError("reg/pd of an empty table are undefined")
    if subject == "quotient":
        B = B.quotient()
    elif subject == "ideal":
        B = B.ideal()
    return RegPd(B.reg, B.pd)


def has_linear_resolution(B: BettiTable, d: int) -> bool:
    if B.subject != "ideal":
        raise ValueError("linearity is a property of the ideal's table")
    if not B.entries:
        raise UndefinedError("the zero ideal has no resolution to test")
    return all(j == i + d for i, j in B.entries)


# ---------------------------------------------------------------- Hochster


def _nonface_table(n: int, gens: tuple[int, ...]) -> bytearray:
    """nonface[m] == 1 iff m contains some generator support."""
    nonface = bytearray(1 << n)
    for g in gens:
        nonface[g] = 1
    for m in range(1 << n):
        if nonface[m]:
            continue
        s = m
        while s:
            low = s & -s
            if nonface[m ^ low]:
                nonface[m] = 1
                break
            s ^= low
    return nonface


@lru_cache(maxsize=4096)
def _hochster(I: MonomialIdeal, field: FieldSpec) -> BettiTable:
    n = I.n
    gens = I.gens
    nonface = _nonface_table(n, gens)
    entries: dict[tuple[int, int], int] = {}
    for W in range(1, 1 << n):
        # Δ_W is a cone unless W is the union of the generators inside it
        u = 0
        for g in gens:
            if g & ~W == 0:
                u |= g
        if u != W:
            continue
        faces = [s for s in submasks(W) if not nonface[s]]
        h = _reduced_homology(faces, field)
        size = bin(W).count("1")
        for d, r in enumerate(h, start=-1):
            if r:
                i = size - d - 2
                entries[(i, size)] = entries.get((i, size), 0) + r
    return BettiTable(entries, "ideal")


def hochster_betti(I: MonomialIdeal, field: FieldSpec = GF2) -> BettiTable:
    """Graded Betti numbers of the ideal I over ``field`` by Hochster's formula:
    β_{i,j}(I) = Σ_{|W| = j} dim H̃_{j-i-2}(Δ_W)."""
    if I.is_zero or I.is_unit:
        raise UndefinedError("Hochster's formula is applied to proper nonzero ideals only")
    check_size(I.n, "ideal")
    return _hochster(I, field)


def ideal_betti(I: MonomialIdeal, field: FieldSpec = GF2) -> BettiTable:
    """Like hochster_betti but total: zero ideal -> empty table, unit ideal -> β_{0,0} = 1."""
    if I.is_zero:
        return BettiTable({}, "ideal")
    if I.is_unit:
        return BettiTable({(0, 0): 1}, "ideal")
    return hochster_betti(I, field)


def taylor_alternating_sums(I: MonomialIdeal) -> dict[int, int]:
    """Σ_i (-1)^i β_{i,j}(I) for each j, by inclusion-exclusion over generator lcms."""
    acc: dict[int, int] = {}
    for g in I.gens:
        upd: dict[int, int] = {g: 1}
        for m, c in acc.items():
            key = m | g
            upd[key] = upd.get(key, 0) - c
        for m, c in upd.items():
            acc[m] = acc.get(m, 0) + c
    out: dict[int, int] = {}
    for m, c in acc.items():
        j = bin(m).count("1")
        out[j] = out.get(j, 0) + c
    return {j: v for j, v in out.items() if v}


# ---------------------------------------------------------------- Reisner


def reisner_cm_check(D: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Cohen-Macaulayness of k[Δ]: every link (including Δ itself) has vanishing
    reduced homology below its top dimension."""
    if D.is_void:
        raise UndefinedError("the void complex has no Stanley-Reisner ring to test")
    check_size(D.n, "complex")
    sizes = {bin(f).count("1") for f in D.facets}
    if len(sizes) > 1:
        return False  # CM complexes are pure
    for F in D.faces():
        L = link(D, F)
        h = _homology_of_facets(L.facets, field)
        if any(h[:-1]):
            return False
    return True


def is_cohen_macaulay_quotient(I: MonomialIdeal, field: FieldSpec = GF2) -> bool:
    from cliqueideals.simplicial import stanley_reisner_complex

    return reisner_cm_check(stanley_reisner_complex(I), field)
