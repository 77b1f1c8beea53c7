"""Burning a fixed digraph: schedule checks, exact burning number, kings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import BudgetExceeded, PreconditionError
from .graph import Orientation, ball


@dataclass(frozen=True)
class BurningSchedule:
    """``fires[i]`` is the vertex that carries the fire of radius ``i``."""

    fires: tuple[int, ...]

    def __init__(self, fires: Iterable[int]):
        object.__setattr__(self, "fires", tuple(int(f) for f in fires))

    @property
    def b(self) -> int:
        return len(self.fires)

    def __len__(self) -> int:
        return len(self.fires)

    def __iter__(self):
        return iter(self.fires)

    def __getitem__(self, i):
        return self.fires[i]


@dataclass(frozen=True)
class BnResult:
    value: int
    schedule: BurningSchedule
    optimality_certified: bool = True


def _check_kernel_size(o: Orientation) -> None:
    if o.n > K.MAX_N:
        raise BudgetExceeded(f"burning search supports n <= {K.MAX_N}, got {o.n}")


def burned_set(o: Orientation, schedule: Sequence[int]) -> frozenset[int]:
    burnt: set[int] = set()
    for r, w in enumerate(schedule):
        if not 0 <= w < o.n:
            raise PreconditionError(f"fire {w} is not a vertex")
        burnt |= ball(o, w, r)
    return frozenset(burnt)


def verify_schedule(o: Orientation, schedule: Sequence[int]) -> bool:
    return len(burned_set(o, schedule)) == o.n


def burning_decision(o: Orientation, b: int) -> tuple[bool, BurningSchedule | None]:
    """Whether ``o`` has a burning sequence of length exactly ``b``."""
    if b < 0:
        raise PreconditionError("length must be non-negative")
    if o.n == 0:
        # V^b is empty for b >= 1, so only the empty schedule exists
        return (True, BurningSchedule(())) if b == 0 else (False, None)
    _check_kernel_size(o)
    sched = np.zeros(max(b, 1), np.int64)
    if K.can_burn(K.balls_for(o), o.n, b, sched):
        return True, BurningSchedule(sched[:b])
    return False, None


def burning_number(o: Orientation) -> BnResult:
    """Exact ``bn`` with an optimal schedule.

    Lengths are tried upward from 1; each test places fires from the largest
    radius down, so a returned length ``b`` comes with proof that ``b-1``
    failed.
    """
    if o.n == 0:
        return BnResult(0, BurningSchedule(()))
    _check_kernel_size(o)
    sched = np.zeros(o.n + 1, np.int64)
    b = K.burning_number(K.balls_for(o), o.n, 1, sched)
    return BnResult(int(b), BurningSchedule(sched[:b]))


def is_tournament_on(o: Orientation, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    g = o.graph
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def king(o: Orientation, clique: Iterable[int]) -> int:
    """Lowest-indexed vertex of maximum out-degree inside the tournament on ``clique``.

    By Landau's theorem such a vertex reaches the whole clique in two steps.
    """
    vs = sorted(set(clique))
    if not vs:
        raise PreconditionError("empty vertex set has no king")
    if not is_tournament_on(o, vs):
        raise PreconditionError("vertex set does not induce a tournament")
    inside = set(vs)
    return max(vs, key=lambda v: (len(o.out_neighbors[v] & inside), -v))


def is_king(o: Orientation, v: int, clique: Iterable[int]) -> bool:
    """``v`` reaches every vertex of ``clique`` within two arcs of the sub-tournament."""
    inside = set(clique)
    if v not in inside:
        return False
    reach = {v} | (o.out_neighbors[v] & inside)
    for u in list(reach):
        reach |= o.out_neighbors[u] & inside
    return reach == inside


def schedule_from_clique_cover(o: Orientation, cover: Sequence[Iterable[int]]) -> BurningSchedule:
    """Length ``len(cover) + 2``: two free fires at vertex 0, then a king per part.

    Parts are taken in the order given; part ``j`` gets radius ``j + 2``.
    """
    parts = [sorted(set(p)) for p in cover]
    seen = [v for p in parts for v in p]
    if sorted(seen) != list(range(o.n)):
        raise PreconditionError("cover is not a partition of the vertex set")
    if any(not is_tournament_on(o, p) for p in parts):
        raise PreconditionError("some cover part is not a clique")
    if o.n == 0:
        return BurningSchedule(())
    return BurningSchedule([0, 0] + [king(o, p) for p in parts])
