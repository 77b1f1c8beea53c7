import io
import json

import pytest

from obnkit import families as F
from obnkit.cli import RunConfig, build_parser, config_from_args, main, run
from obnkit.io import write_edge_list, write_graph6

from .conftest import graphs_upto

K5 = write_graph6(F.complete(5))
STAR9 = write_graph6(F.star(9))


def _run(argv, stdin_text, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    ns = build_parser().parse_args(argv)
    out, err = io.StringIO(), io.StringIO()
    code = run(config_from_args(ns), out, err)
    return code, out.getvalue(), err.getvalue()


def _records(text):
    return [json.loads(line) for line in text.splitlines() if line.startswith("{")]


def test_obn_examples(monkeypatch):
    code, out, _ = _run(["obn", "--json"], f"{K5}\n{STAR9}\n", monkeypatch)
    k5, star = _records(out)
    assert code == 0
    assert (k5["obn"], k5["method"], k5["input"]) == (3, "exact_search", K5)
    assert (star["obn"], star["method"]) == (9, "ke_theorem")
    assert k5["schema"] == 1


def test_obn_flags(monkeypatch):
    _, out, _ = _run(["obn", "--json", "--exact"], STAR9 + "\n", monkeypatch)
    assert _records(out)[0]["method"] == "exact_search"
    code, out, _ = _run(["obn", "--json", "--ke-only"], K5 + "\n", monkeypatch)
    assert code == 1 and _records(out)[0]["error"] == "PreconditionError"
    _, out, _ = _run(["obn", "--json", "--decision", "4"], K5 + "\n", monkeypatch)
    assert _records(out)[0]["answer"] is False


def test_budget_error_record(monkeypatch):
    k8 = write_graph6(F.complete(8))
    code, out, _ = _run(["obn", "--json", "--exact", "--budget-edges", "10", "--keep-going"],
                        f"{k8}\n{K5}\n", monkeypatch)
    a, b = _records(out)
    assert code == 1
    assert a["error"] == "BudgetExceeded" and a["bracket"] == [1, 3]
    assert b["obn"] == 3


def test_stops_without_keep_going(monkeypatch):
    code, out, _ = _run(["obn", "--json"], f"zz\n{K5}\n", monkeypatch)
    assert code == 1 and len(_records(out)) == 1


def test_bn_inputs(monkeypatch, tmp_path):
    _, out, _ = _run(["bn", "--json"], f"{K5} 76\n", monkeypatch)
    assert _records(out)[0]["bn"] == 3
    arcs = tmp_path / "p.arcs"
    arcs.write_text("3\n0->1\n1->2\n")
    code, out, _ = _run(["bn", "--json", "--format", "digraph-arclist", str(arcs)], "", monkeypatch)
    assert code == 0 and _records(out)[0]["bn"] == 2
    el = tmp_path / "k5.edges"
    el.write_text(write_edge_list(F.complete(5)))
    _, out, _ = _run(["obn", "--json", "--format", "edgelist", str(el)], "", monkeypatch)
    assert _records(out)[0]["obn"] == 3


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig("obn", fmt="digraph-arclist")
    with pytest.raises(ValueError):
        RunConfig("obn", budget_edges=0)
    with pytest.raises(SystemExit):
        main(["obn", "--format", "digraph-arclist", "/dev/null"])


def test_bounds_and_invariants(monkeypatch):
    _, out, _ = _run(["bounds", "--json", "--domination"], K5 + "\n", monkeypatch)
    rec = _records(out)[0]
    assert (rec["lower"], rec["upper"]) == (1, 3) and rec["perfect_bracket"]["assumes_perfect"]
    _, out, _ = _run(["invariants", "--json", "--which", "alpha,cvd"], write_graph6(F.cycle(5)) + "\n", monkeypatch)
    rec = _records(out)[0]
    assert rec["alpha"]["value"] == 2 and rec["cvd"]["value"] == 2 and "omega" not in rec


def test_reduce(monkeypatch, tmp_path):
    stem = str(tmp_path / "inst")
    _, out, _ = _run(["reduce", "--json", "--k", "2", "--check", "--out", stem],
                     write_graph6(F.path(3)) + "\n", monkeypatch)
    rec = _records(out)[0]
    assert rec["b"] == 5 and rec["equivalent"] and rec["files"][0].endswith("inst.edges")
    _, out, _ = _run(["reduce", "--json", "--kind", "mcis", "--parts", "0,1;2,3", "--check"],
                     write_graph6(F.matching(2)) + "\n", monkeypatch)
    rec = _records(out)[0]
    assert rec["b"] == 6 and rec["equivalent"] and rec["sidecar"]["universal"] == 8


def test_gapsearch_connected_n_le_5(monkeypatch):
    lines = "".join(write_graph6(g) + "\n" for g in graphs_upto(5, connected=True))
    code, out, err = _run(["gapsearch", "--json"], lines, monkeypatch)
    recs = _records(out)
    summary = recs[-1]
    assert code == 0 and summary["max_gap"] == 2 and summary["witnesses"] == [K5]
    assert recs[-2]["running_max"] == 2 and "!!!" not in err


def test_gapsearch_flags_large_gap(monkeypatch):
    import obnkit.cli as cli

    monkeypatch.setattr(cli, "_cmd_gap", lambda cfg, item, i: {"gap": 3})
    monkeypatch.setitem(cli.COMMANDS, "gapsearch", cli._cmd_gap)
    _, out, err = _run(["gapsearch", "--json"], K5 + "\n", monkeypatch)
    assert "!!!" in err and _records(out)[0]["flag"] == "GAP_EXCEEDS_2"


def test_parallel_order(monkeypatch):
    graphs = graphs_upto(5, connected=True)
    lines = "".join(write_graph6(g) + "\n" for g in graphs)
    _, seq, _ = _run(["obn", "--json"], lines, monkeypatch)
    _, par, _ = _run(["obn", "--json", "--jobs", "2"], lines, monkeypatch)
    assert [r["input"] for r in _records(par)] == [write_graph6(g) for g in graphs]
    assert _records(seq) == _records(par)


def test_selftest(monkeypatch):
    code, out, _ = _run(["selftest"], "", monkeypatch)
    assert code == 0 and out.count("PASS") == 10
