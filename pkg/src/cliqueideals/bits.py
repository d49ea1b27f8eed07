"""Vertex sets as integer bitsets.

Vertex ``i`` (1-based, as printed) is bit ``i - 1``.  Comparing masks as
integers is exactly colexicographic order on the underlying sets.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int] | int) -> int:
    """Bitset for a collection of 1-based vertices (an int is taken as a mask already)."""
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex indices are 1-based, got {v}")
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertices of a bitset."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def indices(mask: int) -> Iterator[int]:
    """Yield 0-based positions of set bits."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def monomial_str(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{v}" for v in vertices_of(mask))
