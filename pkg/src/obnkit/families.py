"""Small named graphs.  Handy in tests and examples; not a generator."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, disjoint_union


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path(n: int) -> Graph:
    """``P_n``: ``n`` vertices, ``n-1`` edges."""
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def matching(m: int) -> Graph:
    """``mP_2``."""
    return Graph(2 * m, tuple((2 * i, 2 * i + 1) for i in range(m)))


def union(*graphs: Graph) -> Graph:
    return disjoint_union(*graphs)
