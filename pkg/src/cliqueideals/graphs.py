"""Finite simple graphs on labelled vertices 1..n, stored as adjacency bitsets.

A graph carries its own vertex set (a submask of 1..n), so induced subgraphs
and vertex deletions keep the original labels.  That is what lets ideals built
from ``G \\ u`` or ``G \\ N[u]`` live in the same polynomial ring as ``G``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from cliqueideals.bits import full, indices, iter_bits, mask_of, vertices_of


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    vertices: int

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        vertices: Iterable[int] | int | None = None,
    ) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        vmask = full(n) if vertices is None else mask_of(vertices)
        if vmask & ~full(n):
            raise ValueError(f"vertex set {vertices_of(vmask)} exceeds 1..{n}")
        adj = [0] * n
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            for v in (i, j):
                if not 1 <= v <= n:
                    raise ValueError(f"edge {{{i},{j}}} has endpoint outside 1..{n}")
                if not vmask >> (v - 1) & 1:
                    raise ValueError(f"edge {{{i},{j}}} leaves the vertex set")
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(adj), vmask)

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in indices(self.vertices):
            for j in indices(self.adj[i] >> (i + 1) << (i + 1)):
                out.append((i + 1, j + 1))
        return out

    @property
    def order(self) -> int:
        return bin(self.vertices).count("1")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def is_clique(self, mask: int) -> bool:
        for v in indices(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.vertices != full(self.n):
            out["vertices"] = list(vertices_of(self.vertices))
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> Graph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(data["n"], data.get("edges", []), data.get("vertices"))

    def __str__(self) -> str:
        edges = ", ".join(f"{i}-{j}" for i, j in self.edges)
        return f"Graph(n={self.n}, V={list(vertices_of(self.vertices))}, E=[{edges}])"


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def complement(G: Graph) -> Graph:
    """Complement on G's own vertex set."""
    V = G.vertices
    adj = tuple(
        (V & ~G.adj[v] & ~(1 << v)) if V >> v & 1 else 0 for v in range(G.n)
    )
    return Graph(G.n, adj, V)


def induced(G: Graph, vertices: Iterable[int] | int) -> Graph:
    S = mask_of(vertices) & G.vertices
    adj = tuple((G.adj[v] & S) if S >> v & 1 else 0 for v in range(G.n))
    return Graph(G.n, adj, S)


def delete_vertices(G: Graph, vertices: Iterable[int] | int) -> Graph:
    return induced(G, G.vertices & ~mask_of(vertices))


def build_graph(spec: str | dict) -> Graph:
    """Graph from a spec string (``path:5``, ``cycle:6``, ``complete:4``,
    ``complement:<spec>``, ``chordal:<n>:<seed>``, ``file:g.json``) or a JSON dict."""
    if isinstance(spec, dict):
        return Graph.from_json(spec)
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "path":
            return path(int(rest))
        if kind == "cycle":
            return cycle(int(rest))
        if kind == "complete":
            return complete(int(rest))
        if kind == "complement":
            return complement(build_graph(rest))
        if kind == "chordal":
            n, _, seed = rest.partition(":")
            return random_chordal(int(n), int(seed or 0))
        if kind == "file":
            with open(rest) as fh:
                return Graph.from_json(json.load(fh))
    except (ValueError, KeyError, TypeError) as exc:
        raise ValueError(f"bad graph spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown graph spec {spec!r}")


def _check_vertex(G: Graph, v: int) -> None:
    if not 1 <= v <= G.n or not G.vertices >> (v - 1) & 1:
        raise ValueError(f"vertex {v} is not a vertex of the graph")


def closed_neighborhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return frozenset(vertices_of(_closed_nbhd_mask(G, v - 1)))


def _closed_nbhd_mask(G: Graph, v0: int) -> int:
    return G.adj[v0] | (1 << v0)


def is_simplicial_vertex(G: Graph, v: int) -> bool:
    _check_vertex(G, v)
    return G.is_clique(_closed_nbhd_mask(G, v - 1))


def lowest_simplicial_vertex(G: Graph) -> int | None:
    """Lowest-index simplicial vertex (1-based) or None."""
    for v in indices(G.vertices):
        if G.is_clique(_closed_nbhd_mask(G, v)):
            return v + 1
    return None


def perfect_elimination_order(G: Graph) -> list[int] | None:
    """Greedy simplicial elimination, lowest index first; None iff G is not chordal."""
    order = []
    H = G
    while H.vertices:
        v = lowest_simplicial_vertex(H)
        if v is None:
            return None
        order.append(v)
        H = delete_vertices(H, 1 << (v - 1))
    return order


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def clique_masks(G: Graph, t: int) -> list[int]:
    """All t-cliques as bitsets, ascending (= colex)."""
    if t < 0:
        raise ValueError("clique size must be nonnegative")
    if t == 0:
        return [0]
    out: list[int] = []

    def extend(clique: int, cands: int, need: int) -> None:
        if need == 0:
            out.append(clique)
            return
        for low in iter_bits(cands):
            v = low.bit_length() - 1
            # candidates above v keep each clique generated once
            rest = cands & G.adj[v] & ~((low << 1) - 1)
            if bin(rest).count("1") >= need - 1:
                extend(clique | low, rest, need - 1)

    extend(0, G.vertices, t)
    out.sort()
    return out


def enumerate_cliques(G: Graph, t: int) -> list[tuple[int, ...]]:
    if t < 1:
        raise ValueError("t must be at least 1")
    return [vertices_of(m) for m in clique_masks(G, t)]


def enumerate_independent_sets(G: Graph, t: int) -> list[tuple[int, ...]]:
    if t < 1:
        raise ValueError("t must be at least 1")
    return [vertices_of(m) for m in clique_masks(complement(G), t)]


def random_chordal(n: int, seed: int) -> Graph:
    """Chordal graph grown by adding each new vertex adjacent to a random clique.

    Every added vertex is simplicial at the moment it is added, so reversing
    the insertion order is a perfect elimination order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    adj = [0] * n
    for k in range(1, n):
        if rng.random() < 0.15:
            clique = 0
        else:
            anchor = rng.randrange(k)
            clique = 1 << anchor
            nbrs = list(indices(adj[anchor]))
            rng.shuffle(nbrs)
            for w in nbrs:
                if rng.random() < 0.5 and clique & ~adj[w] == 0:
                    clique |= 1 << w
        for w in indices(clique):
            adj[w] |= 1 << k
        adj[k] = clique
    return Graph(n, tuple(adj), full(n))


def is_subgraph(H: Graph, G: Graph) -> bool:
    if H.n != G.n or H.vertices & ~G.vertices:
        return False
    return all(H.adj[v] & ~G.adj[v] == 0 for v in range(G.n))


@dataclass(frozen=True)
class CoverCheck:
    valid: bool
    bound: int | None
    uncovered: tuple[tuple[int, ...], ...] = ()
    non_cochordal: tuple[int, ...] = ()


def verify_cochordal_cover(G: Graph, t: int, cover: Sequence[Graph]) -> CoverCheck:
    """Check that ``cover`` is a family of co-chordal subgraphs covering every t-clique.

    When valid, ``bound`` is ``(t - 1) * len(cover)``, an upper bound on reg(R/K_t(G)).
    """
    for k, H in enumerate(cover):
        if not is_subgraph(H, G):
            raise ValueError(f"cover member {k} is not a subgraph of G")
    bad = tuple(k for k, H in enumerate(cover) if not is_chordal(complement(H)))
    member_cliques = [set(clique_masks(H, t)) for H in cover]
    uncovered = tuple(
        vertices_of(c)
        for c in clique_masks(G, t)
        if not any(c in s for s in member_cliques)
    )
    valid = not bad and not uncovered
    return CoverCheck(valid, (t - 1) * len(cover) if valid else None, uncovered, bad)


def greedy_cochordal_cover(G: Graph, t: int) -> list[Graph]:
    """Greedy cover of the t-cliques by co-chordal induced subgraphs (n <= 9).

    Upper bound only: the minimum cover size is not computed.
    """
    if G.n > 9:
        raise ValueError("greedy co-chordal cover is limited to n <= 9")
    uncovered = set(clique_masks(G, t))
    candidates = []
    for S in range(1, 1 << G.n):
        if S & ~G.vertices:
            continue
        H = induced(G, S)
        if is_chordal(complement(H)):
            candidates.append((S, H))
    cover = []
    while uncovered:
        best = max(
            candidates,
            key=lambda c: (sum(1 for q in uncovered if q & ~c[0] == 0), bin(c[0]).count("1"), -c[0]),
        )
        cover.append(best[1])
        uncovered = {q for q in uncovered if q & ~best[0]}
    return cover
