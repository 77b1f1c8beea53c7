"""Exact classical invariants, each returned with a certificate.

All methods are exact search; every budget raises :class:`BudgetExceeded`
rather than returning an approximation.  Vertex orderings are by
descending degree with ties broken by index, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .errors import BudgetExceeded
from .graph import Graph, complement, connected_components

MIS_MAX_N = 64
COLORING_MAX_N = 24
LONGEST_PATH_MAX_N = 20


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _degree_order(g: Graph, vertices: Iterable[int]) -> list[int]:
    return sorted(vertices, key=lambda v: (-g.degree(v), v))


def _budget(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise BudgetExceeded(f"instance too large for exact {what}: n={g.n} > {limit}")


# --- certificate checkers -------------------------------------------------

def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return len(set(s)) == len(s) and all(not g.has_edge(u, v) for u, v in combinations(s, 2))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return len(set(s)) == len(s) and all(g.has_edge(u, v) for u, v in combinations(s, 2))


def is_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    edges = list(edges)
    ends = [x for e in edges for x in e]
    return len(set(ends)) == len(ends) and all(g.has_edge(u, v) for u, v in edges)


def is_partition(n: int, parts: Sequence[Iterable[int]]) -> bool:
    flat = [v for p in parts for v in p]
    return sorted(flat) == list(range(n)) and all(len(list(p)) > 0 for p in parts)


def is_clique_partition(g: Graph, parts: Sequence[Iterable[int]]) -> bool:
    return is_partition(g.n, parts) and all(is_clique(g, p) for p in parts)


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges)


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges)


def is_cluster_deletion_set(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    rest = [v for v in range(g.n) if v not in s]
    pos = {v: i for i, v in enumerate(rest)}
    sub = Graph(len(rest), tuple((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos))
    return all(is_clique(sub, c) for c in connected_components(sub))


def is_simple_path(g: Graph, p: Sequence[int]) -> bool:
    return len(set(p)) == len(p) and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


# --- independence / clique ------------------------------------------------

def max_independent_set(g: Graph) -> tuple[int, frozenset[int]]:
    """Branch and bound; the bound greedily covers the candidates by cliques."""
    _budget(g, MIS_MAX_N, "independence number")
    adj = g.adj_mask
    order = _degree_order(g, range(g.n))
    rank = {v: i for i, v in enumerate(order)}
    best_set = 0
    best = 0

    def cover_sort(cand: int) -> list[tuple[int, int]]:
        # vertices of cand with the number of the clique class they landed in
        classes: list[int] = []
        labelled = []
        for v in sorted(_bits(cand), key=rank.__getitem__):
            bit = 1 << v
            for k, cls in enumerate(classes):
                if cls & ~adj[v] == 0:
                    classes[k] |= bit
                    break
            else:
                classes.append(bit)
                k = len(classes) - 1
            labelled.append((k + 1, v))
        labelled.sort()
        return labelled

    def expand(size: int, chosen: int, cand: int) -> None:
        nonlocal best, best_set
        for bound, v in reversed(cover_sort(cand)):
            if size + bound <= best:
                return
            bit = 1 << v
            nxt = cand & ~adj[v] & ~bit
            if nxt:
                expand(size + 1, chosen | bit, nxt)
            elif size + 1 > best:
                best, best_set = size + 1, chosen | bit
            cand &= ~bit

    if g.n:
        expand(0, 0, (1 << g.n) - 1)
    return best, frozenset(_bits(best_set))


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Bron-Kerbosch with Tomita pivoting, pruned by ``|R| + |P| <= best``."""
    _budget(g, MIS_MAX_N, "clique number")
    adj = g.adj_mask
    best: list = [0, 0]

    def bk(r: int, rsize: int, p: int, x: int) -> None:
        if p == 0:
            if x == 0 and rsize > best[0]:
                best[0], best[1] = rsize, r
            return
        if rsize + bin(p).count("1") <= best[0]:
            return
        pivot = max(_bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        for v in list(_bits(p & ~adj[pivot])):
            bit = 1 << v
            bk(r | bit, rsize + 1, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        bk(0, 0, (1 << g.n) - 1, 0)
    return best[0], frozenset(_bits(best[1]))


def vertex_cover_number(g: Graph) -> tuple[int, frozenset[int]]:
    a, indep = max_independent_set(g)
    return g.n - a, frozenset(range(g.n)) - indep


# --- matching ---------------------------------------------------------------

def max_matching(g: Graph) -> tuple[int, frozenset[tuple[int, int]]]:
    """Maximum cardinality matching (Edmonds' blossom algorithm via networkx)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    mate = nx.max_weight_matching(h, maxcardinality=True)
    edges = frozenset((min(u, v), max(u, v)) for u, v in mate)
    return len(edges), edges


# --- coloring ---------------------------------------------------------------

def chromatic_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact DSATUR branch and bound; colours are ``0..chi-1``."""
    _budget(g, COLORING_MAX_N, "chromatic number")
    n = g.n
    if n == 0:
        return 0, ()
    adj = g.adjacency
    # greedy largest-first start
    greedy = [-1] * n
    for v in _degree_order(g, range(n)):
        used = {greedy[u] for u in adj[v]}
        c = 0
        while c in used:
            c += 1
        greedy[v] = c
    best = [max(greedy) + 1, tuple(greedy)]
    lower, _ = clique_number(g)
    if best[0] == lower:
        return best[0], best[1]

    colors = [-1] * n
    nbr_colors: list[dict[int, int]] = [dict() for _ in range(n)]

    def pick() -> int:
        pv, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                k = (len(nbr_colors[v]), g.degree(v), -v)
                if key is None or k > key:
                    pv, key = v, k
        return pv

    def assign(v, c, delta):
        for u in adj[v]:
            d = nbr_colors[u]
            d[c] = d.get(c, 0) + delta
            if d[c] == 0:
                del d[c]

    def search(done: int, ncol: int) -> bool:
        if ncol >= best[0]:
            return False
        if done == n:
            best[0], best[1] = ncol, tuple(colors)
            return best[0] == lower
        v = pick()
        for c in range(min(ncol + 1, best[0] - 1)):
            if c in nbr_colors[v]:
                continue
            colors[v] = c
            assign(v, c, 1)
            stop = search(done + 1, max(ncol, c + 1))
            assign(v, c, -1)
            colors[v] = -1
            if stop:
                return True
        return False

    search(0, 0)
    return best[0], best[1]


def clique_cover_number(g: Graph) -> tuple[int, tuple[frozenset[int], ...]]:
    """``cc(G) = chi(complement)``; colour classes of the complement are cliques of ``g``."""
    _budget(g, COLORING_MAX_N, "clique cover number")
    k, col = chromatic_number(complement(g))
    parts = [set() for _ in range(k)]
    for v, c in enumerate(col):
        parts[c].add(v)
    ordered = sorted((frozenset(p) for p in parts), key=min)
    return k, tuple(ordered)


# --- cluster vertex deletion ----------------------------------------------

def _first_induced_p3(g: Graph, alive: int) -> tuple[int, int, int] | None:
    adj = g.adj_mask
    vs = list(_bits(alive))
    for i, a in enumerate(vs):
        for j in range(i + 1, len(vs)):
            b = vs[j]
            for c in vs[j + 1:]:
                e = (adj[a] >> b & 1) + (adj[b] >> c & 1) + (adj[a] >> c & 1)
                if e == 2:
                    return a, b, c
    return None


def cluster_vertex_deletion(g: Graph) -> tuple[int, frozenset[int]]:
    """Minimum deletion set by iterative deepening over induced-P3 branching."""
    full = (1 << g.n) - 1

    def branch(alive: int, k: int) -> int | None:
        p3 = _first_induced_p3(g, alive)
        if p3 is None:
            return 0
        if k == 0:
            return None
        for v in p3:
            sub = branch(alive & ~(1 << v), k - 1)
            if sub is not None:
                return sub | (1 << v)
        return None

    for k in range(g.n + 1):
        found = branch(full, k)
        if found is not None:
            return k, frozenset(_bits(found))
    raise AssertionError("deleting every vertex always works")


# --- longest path -------------------------------------------------------------

def longest_path_length(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Edge length of a longest simple path, by DP over vertex subsets."""
    _budget(g, LONGEST_PATH_MAX_N, "longest path")
    n = g.n
    if n == 0:
        return 0, ()
    adj = g.adj_mask
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best_mask, best_end, best_len = 1, 0, 0
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        size = bin(mask).count("1") - 1
        if size > best_len:
            best_mask, best_end, best_len = mask, (e & -e).bit_length() - 1, size
            if best_len == n - 1:
                break
        for v in _bits(e):
            for u in _bits(adj[v] & ~mask):
                ends[mask | 1 << u] |= 1 << u
    path = [best_end]
    mask = best_mask
    while mask != 1 << path[-1]:
        v = path[-1]
        mask &= ~(1 << v)
        u = next(u for u in _bits(adj[v] & mask) if ends[mask] >> u & 1)
        path.append(u)
    return best_len, tuple(reversed(path))


# --- graph classes ------------------------------------------------------------

def is_konig_egervary(g: Graph) -> bool:
    """``alpha(G) = n - nu(G)``."""
    return max_independent_set(g)[0] == g.n - max_matching(g)[0]


def is_disjoint_p2s(g: Graph) -> bool:
    """True iff ``g`` is ``mP_2`` for some ``m >= 1``."""
    return g.n > 0 and g.m * 2 == g.n and all(g.degree(v) == 1 for v in range(g.n))


# --- report -------------------------------------------------------------------

_ALL = ("alpha", "matching", "clique_cover", "omega", "chi", "vc", "cvd", "longest_path")


@dataclass
class InvariantReport:
    alpha: tuple[int, frozenset[int]] | None = None
    matching: tuple[int, frozenset[tuple[int, int]]] | None = None
    clique_cover: tuple[int, tuple[frozenset[int], ...]] | None = None
    omega: tuple[int, frozenset[int]] | None = None
    chi: tuple[int, tuple[int, ...]] | None = None
    vc: tuple[int, frozenset[int]] | None = None
    cvd: tuple[int, frozenset[int]] | None = None
    longest_path: tuple[int, tuple[int, ...]] | None = None
    errors: dict[str, str] = field(default_factory=dict)

    def values(self) -> dict[str, int]:
        return {k: getattr(self, k)[0] for k in _ALL if getattr(self, k) is not None}

    def check(self, g: Graph) -> dict[str, bool]:
        """Run every certificate checker on the fields present."""
        checks = {
            "alpha": lambda r: len(r[1]) == r[0] and is_independent_set(g, r[1]),
            "matching": lambda r: len(r[1]) == r[0] and is_matching(g, r[1]),
            "clique_cover": lambda r: len(r[1]) == r[0] and is_clique_partition(g, r[1]),
            "omega": lambda r: len(r[1]) == r[0] and is_clique(g, r[1]),
            "chi": lambda r: is_proper_coloring(g, r[1]) and len(set(r[1])) == r[0],
            "vc": lambda r: len(r[1]) == r[0] and is_vertex_cover(g, r[1]),
            "cvd": lambda r: len(r[1]) == r[0] and is_cluster_deletion_set(g, r[1]),
            "longest_path": lambda r: len(r[1]) == r[0] + 1 and is_simple_path(g, r[1]),
        }
        return {k: checks[k](getattr(self, k)) for k in _ALL if getattr(self, k) is not None}


_COMPUTE = {
    "alpha": max_independent_set,
    "matching": max_matching,
    "clique_cover": clique_cover_number,
    "omega": clique_number,
    "chi": chromatic_number,
    "vc": vertex_cover_number,
    "cvd": cluster_vertex_deletion,
    "longest_path": longest_path_length,
}


def invariant_report(g: Graph, which: Iterable[str] | None = None, keep_going: bool = False) -> InvariantReport:
    rep = InvariantReport()
    for name in which or _ALL:
        if name not in _COMPUTE:
            raise ValueError(f"unknown invariant {name!r}")
        try:
            setattr(rep, name, _COMPUTE[name](g))
        except BudgetExceeded as exc:
            if not keep_going:
                raise
            rep.errors[name] = str(exc)
    return rep
