"""Undirected graphs, orientations and out-distance queries.

Vertices are ``0..n-1``.  Edges are kept in strict lexicographic order of
``(u, v)`` with ``u < v``; that order is what orientation masks index into.
Bit ``i`` of a mask (or ``bits[i]``) is the direction of edge ``i``: unset
means ``u -> v``, set means ``v -> u``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import PreconditionError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("vertex count must be non-negative")
        edges = tuple(tuple(e) for e in self.edges)
        for u, v in edges:
            if not (0 <= u < v < self.n):
                raise PreconditionError(f"edge {(u, v)} violates 0 <= u < v < n={self.n}")
        for a, b in zip(edges, edges[1:]):
            if not a < b:
                raise PreconditionError("edge list must be strictly sorted without duplicates")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build from any iterable of pairs; orders endpoints and sorts.

        Loops and duplicates raise, since silently merging them hides input bugs.
        """
        norm = []
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise PreconditionError("duplicate edge")
        return cls(n, tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets."""
        return tuple(sum(1 << u for u in nb) for nb in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __len__(self) -> int:
        return self.n


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        tuple((u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adjacency[u]),
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``G[S]`` relabelled to ``0..|S|-1`` in increasing order of original index."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(
        len(keep),
        tuple((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos),
    )


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, tuple(sorted(edges)))


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != self.graph.m:
            raise PreconditionError(
                f"orientation needs {self.graph.m} bits, got {len(self.bits)}"
            )
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[Sequence[int]]) -> "Orientation":
        bits = [None] * g.m
        for u, v in arcs:
            key = (min(u, v), max(u, v))
            if key not in g.edge_index:
                raise PreconditionError(f"arc {u}->{v} is not an edge of the graph")
            i = g.edge_index[key]
            if bits[i] is not None:
                raise PreconditionError(f"edge {key} oriented twice")
            bits[i] = u > v
        if any(b is None for b in bits):
            raise PreconditionError("every edge needs exactly one arc")
        return cls(g, tuple(bits))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def mask(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, u) if b else (u, v) for (u, v), b in zip(self.graph.edges, self.bits))

    @cached_property
    def out_neighbors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def out_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in s) for s in self.out_neighbors)

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_neighbors[u]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return sum(1 for a, b in self.arcs if b == v)

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(not b for b in self.bits))

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return out_distances(self)

    def restrict(self, vertices: Iterable[int]) -> "Orientation":
        """Sub-orientation on ``G[S]``, relabelled like :func:`induced_subgraph`."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub = induced_subgraph(self.graph, keep)
        return Orientation.from_arcs(
            sub, ((pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos)
        )

    def arc_lines(self) -> str:
        return "".join(f"{u}->{v}\n" for u, v in self.arcs)


def orientation_from_bits(g: Graph, mask: int) -> Orientation:
    if not 0 <= mask < (1 << g.m):
        raise PreconditionError(f"mask {mask} out of range for {g.m} edges")
    return Orientation(g, tuple(bool(mask >> i & 1) for i in range(g.m)))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs directed distances; unreachable entries equal ``inf`` (= n)."""

    dist: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.dist)

    @property
    def inf(self) -> int:
        return self.n

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.dist[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.dist[u][v] < self.inf


def single_source_distances(o: Orientation, source: int) -> list[int]:
    n = o.n
    d = [n] * n
    d[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in o.out_neighbors[x]:
            if d[y] == n:
                d[y] = d[x] + 1
                q.append(y)
    return d


def out_distances(o: Orientation) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(single_source_distances(o, s)) for s in range(o.n)))


def ball(o: Orientation, v: int, r: int) -> frozenset[int]:
    """Vertices at out-distance at most ``r`` from ``v``."""
    if r < 0:
        raise PreconditionError("radius must be non-negative")
    row = o.distances.dist[v]
    n = o.n
    return frozenset(u for u, d in enumerate(row) if d <= r and d < n)
