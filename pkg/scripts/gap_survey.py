"""Run ``gapsearch`` over every connected graph up to ``--max-n`` vertices.

    python3 scripts/gap_survey.py --max-n 7 --jobs 4 > gaps.jsonl

Graphs come from ``tests/data`` when present (``scripts/make_corpus.py``),
otherwise from the networkx atlas, which stops at seven vertices.  The
per-graph records go to stdout; the summary is the last line.  Any graph
with obn - alpha above 2 is also reported on stderr.
"""

import argparse
import os
import sys
import tempfile

from obnkit.cli import RunConfig, run
from obnkit.graph import connected_components
from obnkit.io import parse_graph6, write_graph6
from obnkit.selftest import atlas

DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")


def graphs(max_n):
    for n in range(1, max_n + 1):
        path = os.path.join(DATA, f"graphs{n}.g6")
        if os.path.exists(path):
            with open(path) as fh:
                for line in fh:
                    g = parse_graph6(line)
                    if len(connected_components(g)) == 1:
                        yield g
        elif n <= 7:
            yield from (g for g in atlas(n, connected=True) if g.n == n)
        else:
            sys.exit(f"no corpus for n={n}; run scripts/make_corpus.py first")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--budget-edges", type=int, default=None)
    args = ap.parse_args()
    with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as fh:
        for g in graphs(args.max_n):
            fh.write(write_graph6(g) + "\n")
    try:
        cfg = RunConfig("gapsearch", fh.name, json=True, jobs=args.jobs,
                        budget_edges=args.budget_edges, keep_going=True)
        sys.exit(run(cfg))
    finally:
        os.unlink(fh.name)


if __name__ == "__main__":
    main()
