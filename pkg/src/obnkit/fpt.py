"""Structure around a cluster vertex deletion set, used for parameterised shortcuts.

With ``S`` a minimum cluster deletion set, ``C_1..C_p`` the cliques of
``G - S``, ``s = |S|`` and ``l`` the longest path length:

* ``b <= p`` is always a yes-instance (one vertex per clique is independent);
* ``b > p + s + 2`` is always a no-instance (a king per clique, one fire per
  vertex of ``S``, plus radii 0 and 1);
* in between, burning sequences of length ``b - 1`` can be assumed *good*
  (see :func:`normalize_to_good`), which is what bounds the number of
  unused parts by a function of ``s + omega``.

The monadic second-order encoding that turns this into an FPT algorithm is
not built here.  At the sizes this package handles, the same question is
answered by ``shortcut_decision`` and, in the window, by the exact solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .burning import BurningSchedule, is_king, king, verify_schedule
from .errors import PreconditionError
from .graph import Graph, Orientation, connected_components, induced_subgraph
from .invariants import cluster_vertex_deletion, clique_number, is_clique, longest_path_length


@dataclass(frozen=True)
class ClusterStructure:
    S: frozenset[int]
    components: tuple[frozenset[int], ...]
    omega: int
    ell: int

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def k(self) -> int:
        return self.omega + self.s

    def large_count(self, b: int) -> int:
        """``L``: large fires in a sequence of length ``b - 1``."""
        return max(0, b - 1 - self.ell)

    def component_of(self, v: int) -> int | None:
        for j, c in enumerate(self.components):
            if v in c:
                return j
        return None


def cluster_structure(g: Graph) -> ClusterStructure:
    s, S = cluster_vertex_deletion(g)
    rest = sorted(set(range(g.n)) - S)
    sub = induced_subgraph(g, rest)
    comps = tuple(
        frozenset(rest[i] for i in c) for c in connected_components(sub)
    )
    omega, _ = clique_number(g)
    ell, _ = longest_path_length(g)
    return ClusterStructure(S, comps, omega, ell)


def shortcut_decision(g: Graph, b: int, cs: ClusterStructure | None = None) -> str:
    """``"yes"``, ``"no"`` or ``"unknown"`` for the question ``obn(g) >= b``."""
    cs = cs or cluster_structure(g)
    if b <= cs.p:
        return "yes"
    if b > cs.p + cs.s + 2:
        return "no"
    return "unknown"


@dataclass(frozen=True)
class GoodnessReport:
    distinct_positions: bool
    one_per_component: bool
    at_kings: bool

    @property
    def good(self) -> bool:
        return self.distinct_positions and self.one_per_component and self.at_kings


def _check_structure(g: Graph, cs: ClusterStructure) -> None:
    for c in cs.components:
        if not is_clique(g, c):
            raise PreconditionError("cluster component is not a clique")


def large_fires(sched, ell: int) -> list[int]:
    """Radii of the large fires (radius at least ``ell``)."""
    return [r for r in range(len(sched)) if r >= ell]


def goodness_check(o: Orientation, sched, cs: ClusterStructure) -> GoodnessReport:
    _check_structure(o.graph, cs)
    radii = large_fires(sched, cs.ell)
    pos = [sched[r] for r in radii]
    comp_hits = [cs.component_of(v) for v in pos]
    in_comp = [j for j in comp_hits if j is not None]
    kings_ok = all(
        is_king(o, v, cs.components[j]) for v, j in zip(pos, comp_hits) if j is not None
    )
    return GoodnessReport(
        distinct_positions=len(set(pos)) == len(pos),
        one_per_component=len(set(in_comp)) == len(in_comp),
        at_kings=kings_ok,
    )


def normalize_to_good(o: Orientation, sched, cs: ClusterStructure) -> BurningSchedule:
    """Rewrite a burning sequence into a good one of the same length.

    Three passes: spread large fires sharing a vertex, move away a large fire
    that is dominated by an arc from another large fire in its clique, then
    shift each in-clique large fire onto a king.  Replacement targets are the
    lowest-index admissible vertices.
    """
    g = o.graph
    _check_structure(g, cs)
    fires = list(sched)
    if not verify_schedule(o, fires):
        raise PreconditionError("input schedule does not burn the orientation")
    L = large_fires(fires, cs.ell)
    if len(L) > cs.p + cs.s:
        raise PreconditionError(f"L={len(L)} exceeds p+s={cs.p + cs.s}")

    # 1: no two large fires on one vertex
    for idx, r in enumerate(L):
        taken = {fires[q] for q in L[:idx]}
        if fires[r] in taken:
            others = {fires[q] for q in L if q != r}
            fires[r] = next(v for v in range(g.n) if v not in others)

    # 2: at most one large fire per clique
    while True:
        clash = None
        for a in L:
            for c in L:
                ja = cs.component_of(fires[a])
                if a != c and ja is not None and ja == cs.component_of(fires[c]) and o.has_arc(fires[a], fires[c]):
                    clash = c
                    break
            if clash is not None:
                break
        if clash is None:
            break
        others = [fires[q] for q in L if q != clash]
        used_comps = {cs.component_of(v) for v in others} - {None}
        fires[clash] = next(
            v for v in range(g.n)
            if v not in others and cs.component_of(v) not in used_comps
        )

    # 3: in-clique large fires sit at kings
    for r in L:
        j = cs.component_of(fires[r])
        if j is not None and not is_king(o, fires[r], cs.components[j]):
            fires[r] = king(o, cs.components[j])

    out = BurningSchedule(fires)
    assert verify_schedule(o, out), "normalisation broke the schedule"
    return out
