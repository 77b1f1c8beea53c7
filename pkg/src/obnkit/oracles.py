"""Brute-force reference implementations.

Everything here enumerates the definition directly and is meant to stay
obviously correct; the fast solvers are checked against these on tiny
inputs.  Nothing in the main code path imports this module.
"""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph, Orientation, orientation_from_bits


def _bfs_dist(out, n, s):
    dist = [None] * n
    dist[s] = 0
    frontier = [s]
    while frontier:
        nxt = []
        for x in frontier:
            for y in out[x]:
                if dist[y] is None:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def relaxation_distances(o: Orientation) -> list[list[float]]:
    """Floyd-Warshall style relaxation; ``inf`` for unreachable."""
    n = o.n
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in o.arcs:
        d[u][v] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def is_burning_sequence(o: Orientation, seq) -> bool:
    n = o.n
    out = [[v for (u, v) in o.arcs if u == x] for x in range(n)]
    burnt = set()
    for r, w in enumerate(seq):
        dist = _bfs_dist(out, n, w)
        burnt.update(v for v in range(n) if dist[v] is not None and dist[v] <= r)
    return len(burnt) == n


def burning_number_naive(o: Orientation) -> int:
    """Smallest ``b`` for which some sequence in ``V^b`` burns everything."""
    n = o.n
    if n == 0:
        return 0
    for b in range(1, n + 1):
        for seq in product(range(n), repeat=b):
            if is_burning_sequence(o, seq):
                return b
    raise AssertionError("n fires always suffice")


def obn_naive(g: Graph) -> int:
    return max(burning_number_naive(orientation_from_bits(g, mask)) for mask in range(1 << g.m))


def independence_number_naive(g: Graph) -> int:
    best = 0
    for r in range(g.n + 1):
        for sub in combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = r
    return best


def matching_number_naive(g: Graph) -> int:
    best = 0
    for r in range(1, g.m + 1):
        for sub in combinations(g.edges, r):
            ends = [x for e in sub for x in e]
            if len(set(ends)) == len(ends):
                best = r
                break
    return best


def chromatic_number_naive(g: Graph) -> int:
    if g.n == 0:
        return 0
    for c in range(1, g.n + 1):
        for col in product(range(c), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges):
                return c
    raise AssertionError


def clique_number_naive(g: Graph) -> int:
    best = 0
    for r in range(g.n + 1):
        for sub in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = r
    return best


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def clique_cover_naive(g: Graph) -> int:
    best = g.n
    for part in _set_partitions(list(range(g.n))):
        if all(g.has_edge(u, v) for blk in part for u, v in combinations(blk, 2)):
            best = min(best, len(part))
    return best


def cvd_naive(g: Graph) -> int:
    for r in range(g.n + 1):
        for sub in combinations(range(g.n), r):
            keep = [v for v in range(g.n) if v not in sub]
            ok = True
            for a, b, c in combinations(keep, 3):
                e = g.has_edge(a, b) + g.has_edge(b, c) + g.has_edge(a, c)
                if e == 2:
                    ok = False
                    break
            if ok:
                return r
    raise AssertionError


def longest_path_naive(g: Graph) -> int:
    best = 0

    def walk(v, seen, length):
        nonlocal best
        best = max(best, length)
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                walk(u, seen, length + 1)
                seen.remove(u)

    for v in range(g.n):
        walk(v, {v}, 0)
    return best


def domination_number_naive(o: Orientation) -> int:
    n = o.n
    closed = [{x} | {v for (u, v) in o.arcs if u == x} for x in range(n)]
    for r in range(n + 1):
        for sub in combinations(range(n), r):
            covered = set()
            for x in sub:
                covered |= closed[x]
            if len(covered) == n:
                return r
    raise AssertionError


def odn_naive(g: Graph) -> int:
    return max(domination_number_naive(orientation_from_bits(g, mask)) for mask in range(1 << g.m))
