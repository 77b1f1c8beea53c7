import random

import pytest

from obnkit import families as F
from obnkit import oracles as O
from obnkit.bounds import (
    bracket,
    caro_wei_lower,
    lower_bound_alpha,
    odn_bruteforce,
    perfect_bracket,
    upper_bound_clique_cover,
    upper_bound_matching,
)
from obnkit.burning import burning_number
from obnkit.graph import induced_subgraph
from obnkit.invariants import max_independent_set
from obnkit.solver import obn_exact

from .conftest import all_graphs, graphs_upto


def test_alpha_witness_star():
    a, o = lower_bound_alpha(F.star(4))
    assert a == 4
    assert set(o.arcs) == {(i, 0) for i in range(1, 5)}
    assert all(o.in_degree(v) == 0 for v in range(1, 5))


def test_alpha_witness_complete():
    a, o = lower_bound_alpha(F.complete(4))
    assert a == 1
    assert burning_number(o).value >= 1


def test_alpha_witness_3p2():
    a, o = lower_bound_alpha(F.matching(3))
    assert a == 3
    assert sum(o.in_degree(v) == 0 for v in range(6)) == 3
    assert burning_number(o).value >= 3


def test_matching_bound():
    assert upper_bound_matching(F.complete(5)) == 4
    assert upper_bound_matching(F.path(2)) == 2
    assert upper_bound_matching(F.empty(4)) == 5


def test_clique_cover_bound():
    for n in range(1, 8):
        assert upper_bound_clique_cover(F.complete(n)) == 3
    assert upper_bound_clique_cover(F.empty(4)) == 6
    assert upper_bound_clique_cover(F.cycle(5)) == 5


def test_perfect_bracket():
    assert perfect_bracket(F.complete(5)) == (1, 3)
    assert perfect_bracket(F.path(4)) == (2, 4)
    g = F.complete_bipartite(2, 3)
    a = max_independent_set(g)[0]
    assert perfect_bracket(g) == (a, a + 2)


def test_caro_wei():
    assert caro_wei_lower(F.empty(6)) == 6
    for n in range(1, 8):
        assert caro_wei_lower(F.complete(n)) == 1
    assert caro_wei_lower(F.cycle(5)) == 2 == max_independent_set(F.cycle(5))[0]
    assert caro_wei_lower(F.empty(0)) == 0
    for g in graphs_upto(6):
        assert caro_wei_lower(g) <= max_independent_set(g)[0]


def test_odn_small():
    assert odn_bruteforce(F.complete(1)) == 1
    assert odn_bruteforce(F.path(2)) == 1
    assert odn_bruteforce(F.matching(2)) == 2
    for g in graphs_upto(4):
        assert odn_bruteforce(g) == O.odn_naive(g)


def test_bracket_examples():
    b = bracket(F.complete(5))
    assert (b.lower, b.upper) == (1, 3)
    b = bracket(F.matching(3))
    assert (b.lower, b.upper) == (3, 4)
    assert b.notes["clique_cover"] == 5
    b = bracket(F.star(5))
    assert (b.lower, b.upper) == (5, 6)


def test_bracket_with_domination():
    b = bracket(F.matching(2), with_domination=True)
    assert b.notes["domination"] == 3
    assert b.upper == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_witness_soundness(n):
    for g in all_graphs(n):
        b = bracket(g)
        assert burning_number(b.lower_witness).value >= b.lower


def test_induced_subgraph_monotone():
    rng = random.Random(17)
    pool = graphs_upto(6)
    for _ in range(200):
        g = rng.choice(pool)
        s = [v for v in range(g.n) if rng.random() < 0.6]
        assert obn_exact(induced_subgraph(g, s)).value <= obn_exact(g).value


def test_gap_witness_k5():
    assert obn_exact(F.complete(5)).value - max_independent_set(F.complete(5))[0] == 2
