import os
from functools import lru_cache

import pytest

from obnkit.graph import connected_components
from obnkit.io import parse_graph6

DATA = os.path.join(os.path.dirname(__file__), "data")


@lru_cache(maxsize=None)
def all_graphs(n: int):
    """Every graph on ``n`` vertices up to isomorphism (``scripts/make_corpus.py``)."""
    with open(os.path.join(DATA, f"graphs{n}.g6")) as fh:
        return tuple(parse_graph6(line) for line in fh if line.strip())


@lru_cache(maxsize=None)
def connected_graphs(n: int):
    return tuple(g for g in all_graphs(n) if len(connected_components(g)) == 1)


def graphs_upto(n: int, connected: bool = False):
    src = connected_graphs if connected else all_graphs
    return [g for k in range(1, n + 1) for g in src(k)]


@pytest.fixture(scope="session")
def corpus():
    return {"all": all_graphs, "connected": connected_graphs, "upto": graphs_upto}
