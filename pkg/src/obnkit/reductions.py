"""Hardness gadgets and finite checks of their correctness.

Both constructions append vertices after the source graph's ``0..n-1``:

* ``reduce_is``: ``n`` isolated vertices at ``n..2n-1``; target ``k + n``.
* ``reduce_mcis``: four isolated vertices at ``n..n+3`` and a universal
  vertex at ``n+4`` adjacent to all others; target ``k + 4``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .errors import PreconditionError
from .graph import Graph
from .invariants import is_clique_partition, max_independent_set
from .io import write_edge_list
from .solver import obn_decision


@dataclass(frozen=True)
class ReductionInstance:
    kind: str  # "is" | "mcis"
    source: Graph
    k: int
    target: Graph
    b: int
    isolated: range
    universal: int | None = None
    parts: tuple[frozenset[int], ...] | None = field(default=None)

    def sidecar(self) -> dict:
        return {
            "kind": self.kind,
            "source_n": self.source.n,
            "k": self.k,
            "target_b": self.b,
            "source_vertices": [0, self.source.n - 1],
            "isolated": [self.isolated.start, self.isolated.stop - 1],
            "universal": self.universal,
            "parts": [sorted(p) for p in self.parts] if self.parts else None,
        }

    def write(self, stem: str) -> tuple[str, str]:
        """``<stem>.edges`` and ``<stem>.json``; returns both paths."""
        paths = f"{stem}.edges", f"{stem}.json"
        with open(paths[0], "w") as fh:
            fh.write(write_edge_list(self.target))
        with open(paths[1], "w") as fh:
            json.dump(self.sidecar(), fh, indent=2)
        return paths


def reduce_is(g: Graph, k: int) -> ReductionInstance:
    if not 1 <= k <= g.n:
        raise PreconditionError(f"k must lie in 1..{g.n}")
    h = Graph(2 * g.n, g.edges)
    return ReductionInstance("is", g, k, h, k + g.n, range(g.n, 2 * g.n))


def reduce_mcis(g: Graph, parts) -> ReductionInstance:
    parts = tuple(frozenset(p) for p in parts)
    if not is_clique_partition(g, parts):
        raise PreconditionError("parts must partition V into cliques")
    n = g.n
    u = n + 4
    edges = list(g.edges) + [(v, u) for v in range(n + 4)]
    h = Graph(n + 5, tuple(sorted(edges)))
    return ReductionInstance("mcis", g, len(parts), h, len(parts) + 4, range(n, n + 4), u, parts)


def source_answer(ri: ReductionInstance) -> bool:
    # a k-part clique partition forces any size-k independent set to be multicoloured
    return max_independent_set(ri.source)[0] >= ri.k


def target_answer(ri: ReductionInstance) -> bool:
    return obn_decision(ri.target, ri.b).answer


def check_equivalence(ri: ReductionInstance) -> bool:
    return source_answer(ri) == target_answer(ri)


def corrupt(ri: ReductionInstance, delta: int = 1) -> ReductionInstance:
    """Same instance with the target shifted; a negative control for the checker."""
    return replace(ri, b=ri.b + delta)
