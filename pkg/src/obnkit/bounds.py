"""Lower and upper bounds on the orientable burning number.

    alpha(G) <= obn(G) <= min(n - nu(G) + 1, cc(G) + 2)

The lower side comes with a certifying orientation: every vertex of a
maximum independent set made a source, so each needs its own fire.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BudgetExceeded
from .graph import Graph, Orientation
from .invariants import clique_cover_number, max_independent_set, max_matching

ODN_MAX_N = 8
ODN_MAX_M = 12


@dataclass(frozen=True)
class ObnBracket:
    lower: int
    upper: int
    lower_witness: Orientation
    upper_reason: str
    notes: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        assert self.lower <= self.upper, (self.lower, self.upper)


def source_orientation(g: Graph, sources: frozenset[int] | set[int]) -> Orientation:
    """Edges touching ``sources`` point away from it; all others go low -> high."""
    return Orientation(g, tuple(v in sources for u, v in g.edges))


def lower_bound_alpha(g: Graph) -> tuple[int, Orientation]:
    a, indep = max_independent_set(g)
    return a, source_orientation(g, indep)


def upper_bound_matching(g: Graph) -> int:
    return g.n - max_matching(g)[0] + 1


def upper_bound_clique_cover(g: Graph) -> int:
    return clique_cover_number(g)[0] + 2


def perfect_bracket(g: Graph) -> tuple[int, int]:
    """``[alpha, alpha + 2]``; only valid when the caller knows ``g`` is perfect."""
    a = max_independent_set(g)[0]
    return a, a + 2


def caro_wei_lower(g: Graph) -> int:
    """``ceil(n / (d + 1))`` with ``d`` the average degree.

    The per-vertex sum of ``1/(deg(v)+1)`` is never smaller and would be a
    drop-in refinement.
    """
    if g.n == 0:
        return 0
    # n / (2m/n + 1) == n*n / (2m + n), kept in integers
    return math.ceil(g.n * g.n / (2 * g.m + g.n))


def _domination_number(n: int, closed: list[int]) -> int:
    full = (1 << n) - 1
    for r in range(n + 1):
        for sub in combinations(range(n), r):
            acc = 0
            for v in sub:
                acc |= closed[v]
            if acc == full:
                return r
    raise AssertionError


def odn_bruteforce(g: Graph) -> int:
    """Orientable domination number by enumerating orientations and vertex subsets."""
    if g.n > ODN_MAX_N or g.m > ODN_MAX_M:
        raise BudgetExceeded(f"odn brute force limited to n <= {ODN_MAX_N}, m <= {ODN_MAX_M}")
    best = 0
    for mask in range(1 << g.m):
        closed = [1 << v for v in range(g.n)]
        for i, (u, v) in enumerate(g.edges):
            if mask >> i & 1:
                closed[v] |= 1 << u
            else:
                closed[u] |= 1 << v
        best = max(best, _domination_number(g.n, closed))
    return best


def bracket(g: Graph, with_domination: bool = False) -> ObnBracket:
    a, witness = lower_bound_alpha(g)
    cw = caro_wei_lower(g)
    by_matching = upper_bound_matching(g)
    by_cover = upper_bound_clique_cover(g)
    notes = {"alpha": a, "caro_wei": cw, "matching": by_matching, "clique_cover": by_cover}
    upper, reason = min((by_matching, "matching"), (by_cover, "clique_cover"))
    if with_domination:
        notes["domination"] = odn_bruteforce(g) + 1
        if notes["domination"] < upper:
            upper, reason = notes["domination"], "domination"
    return ObnBracket(max(a, cw), upper, witness, reason, notes)
