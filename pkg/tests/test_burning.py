import random
from itertools import product

import pytest
from hypothesis import given, settings

from obnkit import families as F
from obnkit import oracles as O
from obnkit.burning import (
    BurningSchedule,
    burning_decision,
    burning_number,
    is_king,
    king,
    schedule_from_clique_cover,
    verify_schedule,
)
from obnkit.errors import PreconditionError
from obnkit.graph import Graph, ball, orientation_from_bits
from obnkit.invariants import clique_cover_number

from .conftest import graphs_upto
from .test_graph import CYCLIC_K5_MASK, orientations

CYCLIC_K5 = orientation_from_bits(F.complete(5), CYCLIC_K5_MASK)


def test_verify_examples():
    assert verify_schedule(orientation_from_bits(F.complete(1), 0), [0])
    arc = orientation_from_bits(F.path(2), 0)
    assert verify_schedule(arc, [1, 0])
    assert not verify_schedule(arc, [0])
    assert not any(verify_schedule(CYCLIC_K5, s) for s in product(range(5), repeat=2))
    with pytest.raises(PreconditionError):
        verify_schedule(arc, [5])


def test_burning_number_examples():
    assert burning_number(orientation_from_bits(F.complete(1), 0)).value == 1
    r = burning_number(CYCLIC_K5)
    assert r.value == 3 and verify_schedule(CYCLIC_K5, r.schedule) and len(r.schedule) == 3
    p3 = orientation_from_bits(F.path(3), 0)
    assert O.burning_number_naive(p3) == 2
    assert burning_number(p3).value == 2
    assert burning_number(orientation_from_bits(Graph(0), 0)).value == 0


def test_decision_examples():
    arc = orientation_from_bits(F.path(2), 0)
    assert burning_decision(arc, 1) == (False, None)
    ok, sched = burning_decision(arc, 2)
    assert ok and verify_schedule(arc, sched)
    assert burning_decision(CYCLIC_K5, 2)[0] is False
    for o in [CYCLIC_K5, arc, orientation_from_bits(F.cycle(6), 13)]:
        ok, sched = burning_decision(o, o.n)
        assert ok and len(sched) == o.n


def test_oracle_all_orientations_connected_n_le_4():
    for g in graphs_upto(4, connected=True):
        for mask in range(1 << g.m):
            o = orientation_from_bits(g, mask)
            r = burning_number(o)
            assert r.value == O.burning_number_naive(o)
            assert O.is_burning_sequence(o, r.schedule)


def test_oracle_random_n_le_6():
    rng = random.Random(2024)
    for _ in range(500):
        g = rng.choice(graphs_upto(6))
        o = orientation_from_bits(g, rng.randrange(1 << g.m))
        r = burning_number(o)
        assert r.value == O.burning_number_naive(o)
        assert len(r.schedule) == r.value and verify_schedule(o, r.schedule)


@settings(max_examples=150, deadline=None)
@given(orientations(max_n=10, min_n=1))
def test_decision_monotone(o):
    bn = burning_number(o).value
    for b in range(0, o.n + 2):
        ok, sched = burning_decision(o, b)
        assert ok == (b >= bn)
        if ok:
            assert len(sched) == b and verify_schedule(o, sched)


def test_king_examples():
    g3 = F.complete(3)
    transitive = orientation_from_bits(g3, 0)  # 0->1, 0->2, 1->2
    assert king(transitive, range(3)) == 0
    cyc = orientation_from_bits(g3, 0b010)  # 0->1, 2->0, 1->2
    assert sorted(cyc.arcs) == [(0, 1), (1, 2), (2, 0)]
    assert king(cyc, range(3)) == 0
    assert king(CYCLIC_K5, range(5)) == 0
    assert ball(CYCLIC_K5, 0, 2) == set(range(5))
    with pytest.raises(PreconditionError):
        king(orientation_from_bits(F.path(3), 0), range(3))


@pytest.mark.parametrize("n", range(1, 8))
def test_max_out_degree_vertices_are_kings(n):
    g = F.complete(n)
    rng = random.Random(n)
    masks = range(1 << g.m) if n <= 5 else [rng.randrange(1 << g.m) for _ in range(400)]
    for mask in masks:
        o = orientation_from_bits(g, mask)
        top = max(o.out_degree(v) for v in range(n))
        for v in range(n):
            if o.out_degree(v) == top:
                assert ball(o, v, 2) == set(range(n))
                assert is_king(o, v, range(n))


def test_cover_schedule_examples():
    s = schedule_from_clique_cover(CYCLIC_K5, [range(5)])
    assert len(s) == 3 and verify_schedule(CYCLIC_K5, s)
    e3 = orientation_from_bits(F.empty(3), 0)
    s = schedule_from_clique_cover(e3, [[0], [1], [2]])
    assert len(s) == 5 and verify_schedule(e3, s)
    c5 = F.cycle(5)
    _, cover = clique_cover_number(c5)
    for mask in range(1 << 5):
        o = orientation_from_bits(c5, mask)
        s = schedule_from_clique_cover(o, cover)
        assert len(s) == 5 and verify_schedule(o, s)
    with pytest.raises(PreconditionError):
        schedule_from_clique_cover(CYCLIC_K5, [[0, 1]])


def test_cover_schedule_always_verifies():
    rng = random.Random(7)
    for g in graphs_upto(6):
        cc, cover = clique_cover_number(g)
        for _ in range(6):
            o = orientation_from_bits(g, rng.randrange(1 << g.m))
            s = schedule_from_clique_cover(o, cover)
            assert verify_schedule(o, s)
            assert burning_number(o).value <= cc + 2


def test_bn_at_most_domination_plus_one():
    for g in graphs_upto(5):
        for mask in range(1 << g.m):
            o = orientation_from_bits(g, mask)
            assert burning_number(o).value <= O.domination_number_naive(o) + 1


def test_schedule_indexing():
    s = BurningSchedule([3, 1, 2])
    assert s.b == 3 and list(s) == [3, 1, 2] and s[0] == 3
