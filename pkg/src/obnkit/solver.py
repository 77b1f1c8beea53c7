"""Orientable burning number: exact search, decision form, KE fast path.

The exact search walks masks in ascending order.  Every orientation is
first asked whether it burns within the current best; only those that do
not get a full burning-number computation.  The scan stops as soon as the
best value meets the upper end of the bracket.  Worst case is
``2^m`` decision calls.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .bounds import ObnBracket, bracket, lower_bound_alpha
from .burning import BurningSchedule, burning_decision, burning_number, verify_schedule
from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, Orientation, connected_components, orientation_from_bits
from .invariants import is_disjoint_p2s, is_konig_egervary, max_independent_set, max_matching

DEFAULT_BUDGET_EDGES = 24
SCHEMA_VERSION = 1


def default_budget() -> int:
    return int(os.environ.get("OBN_BUDGET_EDGES", DEFAULT_BUDGET_EDGES))


@dataclass(frozen=True)
class ObnResult:
    value: int
    witness: Orientation
    method: str  # exact_search | ke_theorem | trivial
    explored: int = 0
    bracket: ObnBracket | None = field(default=None, compare=False)
    alpha: int | None = None

    def to_json(self) -> dict:
        g = self.witness.graph
        return {
            "schema": SCHEMA_VERSION,
            "n": g.n,
            "m": g.m,
            "method": self.method,
            "obn": self.value,
            "alpha": self.alpha,
            "bracket": [self.bracket.lower, self.bracket.upper] if self.bracket else None,
            "witness_mask": self.witness.mask,
            "explored": self.explored,
        }


def _check_budget(g: Graph, budget: int | None, br: ObnBracket | None = None) -> None:
    budget = default_budget() if budget is None else budget
    if g.m > budget:
        raise BudgetExceeded(f"{g.m} edges exceed the exact-search budget of {budget}", partial=br)
    if g.n > K.MAX_N:
        raise BudgetExceeded(f"n={g.n} exceeds kernel limit {K.MAX_N}", partial=br)


def _scan_chunk(args):
    n, edges, lo, hi, best, upper = args
    eu = np.array([u for u, _ in edges], np.int64)
    ev = np.array([v for _, v in edges], np.int64)
    return K.obn_scan(n, eu, ev, lo, hi, best, upper)


def _parallel_scan(g: Graph, best: int, upper: int, jobs: int, chunk: int):
    """Contiguous shards; each task starts from the best value known when it is queued."""
    total = 1 << g.m
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    best_mask, explored = -1, 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = []
        it = iter(bounds)
        for lo, hi in it:
            pending.append(pool.submit(_scan_chunk, (g.n, g.edges, lo, hi, best, upper)))
            if len(pending) >= 2 * jobs:
                break
        while pending:
            fut = pending.pop(0)
            b, mask, ex = fut.result()
            explored += int(ex)
            if b > best:
                best, best_mask = int(b), int(mask)
            if best >= upper:
                for f in pending:
                    f.cancel()
                break
            nxt = next(it, None)
            if nxt is not None:
                pending.append(pool.submit(_scan_chunk, (g.n, g.edges, nxt[0], nxt[1], best, upper)))
    return best, best_mask, explored


def obn_exact(g: Graph, budget: int | None = None, jobs: int = 1, chunk: int = 1 << 16) -> ObnResult:
    br = bracket(g)
    _check_budget(g, budget, br)
    alpha = br.notes["alpha"]
    if g.m == 0:
        return ObnResult(g.n, br.lower_witness, "trivial", 1, br, alpha)
    witness = br.lower_witness
    best = burning_number(witness).value
    explored = 1
    if best < br.upper:
        if jobs > 1 and g.m > 16:
            b, mask, ex = _parallel_scan(g, best, br.upper, jobs, chunk)
        else:
            eu, ev = K.edge_arrays(g)
            b, mask, ex = K.obn_scan(g.n, eu, ev, 0, 1 << g.m, best, br.upper)
        explored += int(ex)
        if b > best:
            best, witness = int(b), orientation_from_bits(g, int(mask))
    return ObnResult(best, witness, "exact_search", explored, br, alpha)


@dataclass
class DecisionResult:
    answer: bool
    witness: Orientation | None = None
    # mask -> schedule of length b-1, filled on request for no-instances
    certificate: dict[int, BurningSchedule] | None = None

    def __bool__(self) -> bool:
        return self.answer


def obn_decision(g: Graph, b: int, budget: int | None = None, certify: bool = False) -> DecisionResult:
    """Is ``obn(g) >= b``?"""
    if b <= 0:
        return DecisionResult(True, lower_bound_alpha(g)[1])
    if g.n == 0:
        return DecisionResult(False, certificate={} if certify else None)
    br = bracket(g)
    if br.lower >= b:
        return DecisionResult(True, br.lower_witness)
    if b > br.upper and not certify:
        return DecisionResult(False)
    _check_budget(g, budget, br)
    eu, ev = K.edge_arrays(g)
    mask = int(K.max_fire_check(g.n, eu, ev, 0, 1 << g.m, b - 1))
    if mask >= 0:
        return DecisionResult(True, orientation_from_bits(g, mask))
    cert = None
    if certify:
        cert = {}
        for mk in range(1 << g.m):
            ok, sched = burning_decision(orientation_from_bits(g, mk), b - 1)
            assert ok
            cert[mk] = sched
    return DecisionResult(False, certificate=cert)


# --- Konig-Egervary graphs --------------------------------------------------

def ke_obn(g: Graph, budget: int | None = None) -> ObnResult:
    """``alpha + 1`` for ``mP_2``, otherwise ``alpha``; needs more than four vertices.

    Smaller graphs fall through to the exact search.
    """
    if not is_konig_egervary(g):
        raise PreconditionError("graph is not Konig-Egervary")
    if g.n <= 4:
        return obn_exact(g, budget)
    br = bracket(g)
    alpha, witness = lower_bound_alpha(g)
    value = alpha + 1 if is_disjoint_p2s(g) else alpha
    return ObnResult(value, witness, "ke_theorem", 0, br, alpha)


def _path_order(g: Graph) -> list[int]:
    if g.n != 4 or g.m != 3 or len(connected_components(g)) != 1:
        raise PreconditionError("input is not a P4")
    if any(g.degree(v) > 2 for v in range(4)):
        raise PreconditionError("input is not a P4")
    start = min(v for v in range(4) if g.degree(v) == 1)
    order = [start]
    while len(order) < 4:
        order.append(next(u for u in g.adjacency[order[-1]] if u not in order))
    return order


def p4_fires(o: Orientation, path: tuple[int, int, int, int] | None = None) -> tuple[int, int]:
    """``(radius-0 vertex, radius-2 vertex)`` burning the path ``a-b-c-d``.

    Only the three path arcs count.  Pairs are tried by increasing radius-2
    vertex, then increasing radius-0 vertex.
    """
    if path is None:
        path = tuple(_path_order(o.graph))
    a, b, c, d = path
    links = [(a, b), (b, c), (c, d)]
    for u, v in links:
        if not o.graph.has_edge(u, v):
            raise PreconditionError(f"{u}-{v} is not an edge")
    out = {x: set() for x in path}
    for u, v in links:
        if o.has_arc(u, v):
            out[u].add(v)
        else:
            out[v].add(u)
    verts = set(path)
    for v2 in sorted(verts):
        reach = {v2} | out[v2]
        for x in list(reach):
            reach |= out[x]
        missing = verts - reach
        if len(missing) <= 1:
            v0 = min(missing) if missing else min(verts)
            return v0, v2
    raise AssertionError("every orientation of P4 is burnt by radii 0 and 2")


def _tail(o: Orientation, e: tuple[int, int]) -> int:
    u, v = e
    return u if o.has_arc(u, v) else v


def ke_schedule(o: Orientation) -> BurningSchedule:
    """A burning sequence of length ``alpha`` for a KE graph, ``n > 4``, not ``mP_2``."""
    g = o.graph
    if g.n <= 4:
        raise PreconditionError("needs more than four vertices")
    if is_disjoint_p2s(g):
        raise PreconditionError("mP2 needs alpha + 1 fires")
    alpha, _ = max_independent_set(g)
    nu, matching = max_matching(g)
    if alpha != g.n - nu:
        raise PreconditionError("graph is not Konig-Egervary")
    M = sorted(matching)
    if 2 * nu < g.n:
        covered = {x for e in M for x in e}
        free = [v for v in range(g.n) if v not in covered]
        fires = free + [_tail(o, e) for e in M]
    else:
        partner = {}
        for i, (u, v) in enumerate(M):
            partner[u] = partner[v] = i
        f = next((u, v) for u, v in g.edges if (u, v) not in matching)
        i, j = partner[f[0]], partner[f[1]]
        x = M[i][0] if M[i][1] == f[0] else M[i][1]
        w = M[j][0] if M[j][1] == f[1] else M[j][1]
        v0, v2 = p4_fires(o, (x, f[0], f[1], w))
        rest = [_tail(o, e) for k, e in enumerate(M) if k not in (i, j)]
        fires = [v0, rest[0], v2] + rest[1:]
    sched = BurningSchedule(fires)
    assert len(sched) == alpha and verify_schedule(o, sched), "KE construction failed"
    return sched


def solve(g: Graph, budget: int | None = None, jobs: int = 1, force_exact: bool = False) -> ObnResult:
    """KE graphs with more than four vertices use the closed form; the rest search."""
    if not force_exact and g.n > 4 and is_konig_egervary(g):
        return ke_obn(g, budget)
    return obn_exact(g, budget, jobs)
