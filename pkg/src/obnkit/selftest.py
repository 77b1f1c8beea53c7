"""Quick, self-contained versions of the acceptance checks.

Graphs come from the networkx atlas (every graph up to seven vertices), so
nothing here needs the test corpus.  ``run`` prints one line per check and
returns whether all passed.  The full-size checks live in
``tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import product
from typing import Callable, Iterator, TextIO

from . import families as F
from .bounds import bracket, odn_bruteforce
from .burning import BurningSchedule, burning_number, verify_schedule
from .fpt import ClusterStructure, cluster_structure, goodness_check, normalize_to_good, shortcut_decision
from .graph import Graph, Orientation, connected_components, orientation_from_bits
from .invariants import clique_cover_number, is_konig_egervary, max_independent_set, max_matching
from .reductions import check_equivalence, corrupt, reduce_is, reduce_mcis
from .solver import ke_obn, obn_exact, p4_fires

CYCLIC_K5_MASK = 76  # K5 with arcs (i, i+1) and (i, i+2) mod 5


def atlas(max_n: int = 7, connected: bool = False) -> Iterator[Graph]:
    """Unlabelled graphs on ``1..max_n`` vertices, one per isomorphism class."""
    import networkx as nx

    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        g = Graph.from_edges(n, h.edges())
        if connected and len(connected_components(g)) != 1:
            continue
        yield g


def normalization_case(rng: random.Random, pool) -> tuple[Orientation, BurningSchedule, ClusterStructure]:
    """A random verifying schedule of length ``t`` with ``t - ell <= p + s``.

    An optimal schedule is shifted up to radius ``t - bn`` and the free slots
    are then perturbed at random, keeping only changes that still verify.
    """
    while True:
        g = rng.choice(pool)
        cs = cluster_structure(g)
        o = orientation_from_bits(g, rng.randrange(1 << g.m))
        bn = burning_number(o)
        t_max = cs.ell + cs.p + cs.s
        if bn.value > t_max:
            continue
        t = rng.randint(max(bn.value, cs.ell + 1), max(t_max, cs.ell + 1))
        if t > t_max:
            continue
        shift = t - bn.value
        fires = [rng.randrange(g.n) for _ in range(shift)] + list(bn.schedule)
        for _ in range(2 * t):
            r = rng.randrange(t)
            old = fires[r]
            fires[r] = rng.randrange(g.n)
            if not verify_schedule(o, fires):
                fires[r] = old
        return o, BurningSchedule(fires), cs


# --- checks -----------------------------------------------------------------

def _ladder() -> bool:
    return [obn_exact(F.complete(n)).value for n in range(1, 7)] == [1, 2, 2, 2, 3, 3]


def _cyclic_k5() -> bool:
    o = orientation_from_bits(F.complete(5), CYCLIC_K5_MASK)
    return burning_number(o).value == 3 and not any(
        verify_schedule(o, s) for s in product(range(5), repeat=2)
    )


def _p4() -> bool:
    res = []
    for mask in range(8):
        o = orientation_from_bits(F.path(4), mask)
        v0, v2 = p4_fires(o)
        res.append(verify_schedule(o, [v0, v0, v2]))
    return all(res)


def _ke() -> bool:
    graphs = [g for g in atlas(6, connected=True) if g.n >= 5 and is_konig_egervary(g)]
    graphs += [F.matching(3), F.union(F.star(2), F.star(1))]
    return all(ke_obn(g).value == obn_exact(g).value for g in graphs)


def _bracket() -> bool:
    for g in atlas(5, connected=True):
        v = obn_exact(g).value
        a = max_independent_set(g)[0]
        hi = min(g.n - max_matching(g)[0] + 1, clique_cover_number(g)[0] + 2)
        if not a <= v <= hi or bracket(g).upper != hi:
            return False
    return True


def _domination() -> bool:
    return all(obn_exact(g).value <= odn_bruteforce(g) + 1 for g in atlas(4))


def _reductions() -> bool:
    ok = True
    control_failed = False
    for g in atlas(3):
        for k in range(1, g.n + 1):
            ri = reduce_is(g, k)
            ok &= check_equivalence(ri)
            control_failed |= not check_equivalence(corrupt(ri))
    ok &= check_equivalence(reduce_mcis(F.matching(2), [{0, 1}, {2, 3}]))
    return ok and control_failed


def _fpt() -> bool:
    for g in atlas(4):
        cs = cluster_structure(g)
        v = obn_exact(g).value
        for b in range(1, g.n + 4):
            ans = shortcut_decision(g, b, cs)
            if (ans == "yes" and v < b) or (ans == "no" and v >= b):
                return False
        if g.m and cs.ell > cs.s * cs.omega + cs.s + cs.omega - 1:
            return False
    return True


def _normalize(seed: int) -> bool:
    rng = random.Random(seed)
    pool = [g for g in atlas(5) if g.m]
    for _ in range(100):
        o, s, cs = normalization_case(rng, pool)
        out = normalize_to_good(o, s, cs)
        if len(out) != len(s) or not verify_schedule(o, out) or not goodness_check(o, out, cs).good:
            return False
    return True


def _gap() -> bool:
    gaps = [(obn_exact(g).value - max_independent_set(g)[0], g) for g in atlas(5, connected=True)]
    top = max(d for d, _ in gaps)
    return top == 2 and any(g.n == 5 and g.m == 10 for d, g in gaps if d == 2)


def checks(seed: int = 0) -> list[tuple[str, Callable[[], bool]]]:
    return [
        ("complete ladder K1..K6", _ladder),
        ("K5 cyclic witness", _cyclic_k5),
        ("P4 table", _p4),
        ("KE closed form, connected n in 5..6", _ke),
        ("bracket, connected n <= 5", _bracket),
        ("domination link, n <= 4", _domination),
        ("reduction equivalence, n <= 3", _reductions),
        ("shortcut soundness, n <= 4", _fpt),
        ("normalisation, 100 cases", lambda: _normalize(seed)),
        ("gap survey, connected n <= 5", _gap),
    ]


def run(seed: int = 0, out: TextIO = sys.stdout) -> bool:
    all_ok = True
    for name, fn in checks(seed):
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failure, report and carry on
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}  [{time.perf_counter() - t0:.1f}s]", file=out)
    return all_ok
