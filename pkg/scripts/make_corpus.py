"""Write graph6 files holding every graph on n vertices, one per isomorphism class.

    python scripts/make_corpus.py --max-n 8 --out tests/data

Stands in for ``geng`` when nauty is unavailable.  Graphs on n vertices are
obtained by adding a vertex with every possible neighbourhood to each graph
on n-1 vertices, then deduplicated (Weisfeiler-Lehman hash buckets, VF2
inside a bucket).  Counts are checked against the known totals
1, 2, 4, 11, 34, 156, 1044, 12346.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections import defaultdict

import networkx as nx

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
from obnkit.graph import Graph  # noqa: E402
from obnkit.io import write_graph6  # noqa: E402

KNOWN = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _key(h: nx.Graph) -> str:
    return nx.weisfeiler_lehman_graph_hash(h, iterations=3)


def extend(graphs: list[Graph]) -> list[Graph]:
    n = graphs[0].n + 1 if graphs else 1
    buckets: dict[str, list[nx.Graph]] = defaultdict(list)
    out = []
    for g in graphs:
        for nbrs in range(1 << (n - 1)):
            edges = list(g.edges) + [(u, n - 1) for u in range(n - 1) if nbrs >> u & 1]
            cand = Graph(n, tuple(sorted(edges)))
            h = _nx(cand)
            bucket = buckets[(cand.m, _key(h))]
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            out.append(cand)
    out.sort(key=lambda g: (g.m, g.edges))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default="tests/data")
    args = ap.parse_args(argv)
    os.makedirs(args.out, exist_ok=True)
    level = [Graph(1)]
    for n in range(1, args.max_n + 1):
        t0 = time.time()
        if n > 1:
            level = extend(level)
        if n in KNOWN and len(level) != KNOWN[n]:
            print(f"n={n}: generated {len(level)}, expected {KNOWN[n]}", file=sys.stderr)
            return 1
        path = os.path.join(args.out, f"graphs{n}.g6")
        with open(path, "w") as fh:
            fh.writelines(write_graph6(g) + "\n" for g in level)
        print(f"n={n}: {len(level)} graphs -> {path} ({time.time() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
