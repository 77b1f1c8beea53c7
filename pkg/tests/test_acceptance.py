"""Acceptance criteria, one check each.

Every check prints a single ``PASS``/``FAIL`` line.  Run under pytest, or
directly with ``python3 -m tests.test_acceptance`` for the lines alone.
The KE sweep (criterion 3) dominates at a minute or two.
"""

import io
import json
import random
import sys
import time
from itertools import combinations, product

import pytest

from obnkit import families as F
from obnkit import oracles as O
from obnkit.bounds import odn_bruteforce
from obnkit.burning import burning_number, verify_schedule
from obnkit.cli import build_parser, config_from_args, run
from obnkit.fpt import cluster_structure, goodness_check, normalize_to_good, shortcut_decision
from obnkit.graph import Graph, orientation_from_bits
from obnkit.invariants import (
    clique_cover_number,
    is_clique,
    is_konig_egervary,
    max_independent_set,
    max_matching,
)
from obnkit.io import write_graph6
from obnkit.reductions import check_equivalence, corrupt, reduce_is, reduce_mcis
from obnkit.selftest import CYCLIC_K5_MASK, normalization_case
from obnkit.solver import ke_obn, obn_exact, p4_fires

from .conftest import all_graphs, connected_graphs, graphs_upto


def _labeled(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def _star_forests(n):
    """Disjoint unions of stars (``K_1`` counts as a star) on ``n`` vertices."""

    def parts(rest, top):
        if rest == 0:
            yield []
            return
        for k in range(min(rest, top), 0, -1):
            for tail in parts(rest - k, k):
                yield [k] + tail

    for p in parts(n, n):
        yield F.union(*[F.star(k - 1) for k in p])


def c1_complete_ladder():
    got = [obn_exact(F.complete(n)).value for n in range(1, 8)]
    return got == [1, 2, 2, 2, 3, 3, 3], f"K1..K7 -> {got}"


def c2_cyclic_k5_witness():
    o = orientation_from_bits(F.complete(5), CYCLIC_K5_MASK)
    cyc = set(o.arcs) == {(i, (i + d) % 5) for i in range(5) for d in (1, 2)}
    bn = burning_number(o).value
    fails = sum(not verify_schedule(o, s) for s in product(range(5), repeat=2))
    return cyc and bn == 3 and fails == 25, f"bn={bn}, failing length-2 schedules {fails}/25"


def c3_ke_theorem():
    graphs = [g for n in range(5, 9) for g in connected_graphs(n) if is_konig_egervary(g)]
    graphs += [g for n in range(5, 9) for g in _star_forests(n)]
    graphs += [F.matching(3), F.matching(4)]
    bad = [write_graph6(g) for g in graphs if ke_obn(g).value != obn_exact(g).value]
    return len(graphs) >= 2000 and not bad, f"{len(graphs)} KE graphs, {len(bad)} mismatches {bad[:5]}"


def c4_p4_table():
    ok = 0
    for mask in range(8):
        o = orientation_from_bits(F.path(4), mask)
        v0, v2 = p4_fires(o)
        ok += verify_schedule(o, [v0, v0, v2])
    return ok == 8, f"{ok}/8 orientations burned by radii 0 and 2"


def c5_bracket():
    bad = []
    count = 0
    for g in graphs_upto(6, connected=True):
        count += 1
        v = obn_exact(g).value
        a = max_independent_set(g)[0]
        hi = min(g.n - max_matching(g)[0] + 1, clique_cover_number(g)[0] + 2)
        if not a <= v <= hi:
            bad.append(write_graph6(g))
    return count >= 112 and not bad, f"{count} connected graphs, {len(bad)} violations"


def c6_domination():
    bad = [write_graph6(g) for g in graphs_upto(5) if obn_exact(g).value > odn_bruteforce(g) + 1]
    return not bad, f"{len(graphs_upto(5))} graphs, {len(bad)} violations"


def c7_reductions():
    is_cases = mcis_cases = 0
    ok = True
    instances = []
    for n in range(1, 5):
        for g in _labeled(n):
            for k in range(1, n + 1):
                ri = reduce_is(g, k)
                instances.append(ri)
                ok &= check_equivalence(ri)
                is_cases += 1
            for mask in range(1, 1 << n, 2):
                a = {v for v in range(n) if mask >> v & 1}
                b = set(range(n)) - a
                if b and is_clique(g, a) and is_clique(g, b):
                    ok &= check_equivalence(reduce_mcis(g, [a, b]))
                    mcis_cases += 1
    control = not all(check_equivalence(corrupt(ri)) for ri in instances)
    return ok and control, f"IS {is_cases}, MCIS {mcis_cases}, negative control caught: {control}"


def c8_fpt_shortcuts():
    wrong = 0
    for g in graphs_upto(5):
        cs = cluster_structure(g)
        v = obn_exact(g).value
        for b in range(1, g.n + 4):
            ans = shortcut_decision(g, b, cs)
            wrong += (ans == "yes" and v < b) or (ans == "no" and v >= b)
    over = 0
    total = 0
    for n in range(1, 9):
        for g in all_graphs(n):
            cs = cluster_structure(g)
            total += 1
            over += g.m > 0 and cs.ell > cs.s * cs.omega + cs.s + cs.omega - 1
    return wrong == 0 and over == 0, f"shortcut contradictions {wrong}; path bound violations {over}/{total}"


def c9_normalization():
    rng = random.Random(2024)
    pool = [g for g in graphs_upto(6) if g.m]
    bad = rewritten = 0
    for _ in range(500):
        o, s, cs = normalization_case(rng, pool)
        rewritten += not goodness_check(o, s, cs).good
        out = normalize_to_good(o, s, cs)
        bad += not (len(out) == len(s) and verify_schedule(o, out) and goodness_check(o, out, cs).good)
    return bad == 0, f"500 cases ({rewritten} not good on input), {bad} failures"


def c10_oracles():
    bad_bn = bad_obn = cases = 0
    for g in graphs_upto(4, connected=True):
        for mask in range(1 << g.m):
            o = orientation_from_bits(g, mask)
            bad_bn += burning_number(o).value != O.burning_number_naive(o)
            cases += 1
        bad_obn += obn_exact(g).value != O.obn_naive(g)
    return bad_bn == 0 and bad_obn == 0, f"{cases} orientations, bn mismatches {bad_bn}, obn mismatches {bad_obn}"


def c11_gap_survey():
    lines = "".join(write_graph6(g) + "\n" for g in graphs_upto(6, connected=True))
    old = sys.stdin
    sys.stdin = io.StringIO(lines)
    out, err = io.StringIO(), io.StringIO()
    try:
        code = run(config_from_args(build_parser().parse_args(["gapsearch", "--json"])), out, err)
    finally:
        sys.stdin = old
    summary = json.loads(out.getvalue().splitlines()[-1])
    k5, k6 = write_graph6(F.complete(5)), write_graph6(F.complete(6))
    wit = summary["witnesses"]
    ok = code == 0 and summary["max_gap"] == 2 and k5 in wit and k6 in wit and "!!!" not in err.getvalue()
    return ok, f"{summary['graphs']} graphs, max gap {summary['max_gap']}, witnesses {wit}"


CRITERIA = [
    ("1 complete-graph ladder", c1_complete_ladder),
    ("2 K5 cyclic witness", c2_cyclic_k5_witness),
    ("3 KE closed form", c3_ke_theorem),
    ("4 P4 table", c4_p4_table),
    ("5 bracket soundness", c5_bracket),
    ("6 domination link", c6_domination),
    ("7 reduction equivalence", c7_reductions),
    ("8 shortcuts and path bound", c8_fpt_shortcuts),
    ("9 good-sequence normalisation", c9_normalization),
    ("10 oracle equivalence", c10_oracles),
    ("11 gap survey", c11_gap_survey),
]


def _line(name, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}  [{time.perf_counter() - t0:.1f}s]"


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, line = _line(name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_line(name, fn) for name, fn in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
