"""Command-line front end.

Every subcommand reads graphs from a file or stdin and writes one record per
input graph.  graph6 input is streamed line by line; edge-list and arc-list
inputs hold a single graph.  With ``--json`` each record is one JSON object
carrying ``schema`` and the ``input`` it came from.  The exit status is 0
exactly when no record is an error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

from . import selftest
from .bounds import bracket, perfect_bracket
from .burning import burning_number
from .errors import BudgetExceeded, ObnError, PreconditionError
from .graph import Graph, orientation_from_bits
from .invariants import _ALL as INVARIANTS
from .invariants import clique_cover_number, invariant_report, is_konig_egervary, max_matching
from .io import parse_arc_list, parse_edge_list, parse_graph6, write_graph6
from .reductions import check_equivalence, reduce_is, reduce_mcis
from .solver import SCHEMA_VERSION, ke_obn, obn_decision, obn_exact, solve

FORMATS = ("graph6", "edgelist", "digraph-arclist")


@dataclass
class RunConfig:
    command: str
    input: str = "-"
    fmt: str = "graph6"
    json: bool = False
    budget_edges: int | None = None
    odn_max_n: int = 8
    jobs: int = 1
    seed: int = 0
    keep_going: bool = False
    options: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.budget_edges is not None and self.budget_edges <= 0:
            raise ValueError("--budget-edges must be positive")
        if self.odn_max_n <= 0 or self.jobs <= 0:
            raise ValueError("budgets and --jobs must be positive")
        if self.fmt == "digraph-arclist" and self.command != "bn":
            raise ValueError("digraph-arclist input is only accepted by 'bn'")


# --- input ---------------------------------------------------------------------

def _read_items(cfg: RunConfig) -> Iterator[str]:
    fh = sys.stdin if cfg.input == "-" else open(cfg.input)
    try:
        if cfg.fmt == "graph6":
            for line in fh:
                line = line.strip()
                if line:
                    yield line
        else:
            yield fh.read()
    finally:
        if fh is not sys.stdin:
            fh.close()


def _graph(cfg: RunConfig, item: str) -> Graph:
    if cfg.fmt == "graph6":
        return parse_graph6(item.split()[0])
    return parse_edge_list(item)


def _label(cfg: RunConfig, item: str) -> str:
    return item if cfg.fmt == "graph6" else cfg.input


# --- per-graph commands ------------------------------------------------------------

def _cmd_bn(cfg: RunConfig, item: str, index: int) -> dict:
    if cfg.fmt == "digraph-arclist":
        o = parse_arc_list(item)
    else:
        g = _graph(cfg, item)
        tokens = item.split()
        mask = int(tokens[1]) if cfg.fmt == "graph6" and len(tokens) > 1 else cfg.options.get("mask", 0)
        o = orientation_from_bits(g, mask)
    r = burning_number(o)
    return {"n": o.n, "m": o.graph.m, "mask": o.mask, "bn": r.value, "schedule": list(r.schedule)}


def _cmd_obn(cfg: RunConfig, item: str, index: int) -> dict:
    g = _graph(cfg, item)
    opts = cfg.options
    if opts.get("decision") is not None:
        b = opts["decision"]
        d = obn_decision(g, b, cfg.budget_edges)
        return {"n": g.n, "m": g.m, "decision": b, "answer": d.answer,
                "witness_mask": d.witness.mask if d.witness is not None else None}
    if opts.get("ke_only"):
        if not is_konig_egervary(g):
            raise PreconditionError("graph is not Konig-Egervary (--ke-only)")
        r = ke_obn(g, cfg.budget_edges)
    elif opts.get("exact"):
        r = obn_exact(g, cfg.budget_edges, cfg.jobs)
    else:
        r = solve(g, cfg.budget_edges)
    out = r.to_json()
    out.pop("schema")
    return out


def _cmd_bounds(cfg: RunConfig, item: str, index: int) -> dict:
    g = _graph(cfg, item)
    dom = cfg.options.get("domination", False) and g.n <= cfg.odn_max_n
    br = bracket(g, with_domination=dom)
    _, matching = max_matching(g)
    _, cover = clique_cover_number(g)
    lo, hi = perfect_bracket(g)
    return {
        "n": g.n,
        "m": g.m,
        "lower": br.lower,
        "upper": br.upper,
        "upper_reason": br.upper_reason,
        "notes": br.notes,
        "alpha_witness_mask": br.lower_witness.mask,
        "matching": sorted(matching),
        "clique_cover": [sorted(p) for p in cover],
        # valid only if the graph is perfect; recognition is not attempted
        "perfect_bracket": {"lower": lo, "upper": hi, "assumes_perfect": True},
    }


def _cmd_invariants(cfg: RunConfig, item: str, index: int) -> dict:
    g = _graph(cfg, item)
    rep = invariant_report(g, cfg.options.get("which"), keep_going=cfg.keep_going)
    out: dict[str, Any] = {"n": g.n, "m": g.m}
    for name in cfg.options.get("which") or INVARIANTS:
        res = getattr(rep, name)
        if res is None:
            continue
        wit = res[1]
        if isinstance(wit, (set, frozenset)):
            wit = sorted(sorted(x) if isinstance(x, frozenset) else x for x in wit)
        elif isinstance(wit, tuple) and wit and isinstance(wit[0], frozenset):
            wit = [sorted(p) for p in wit]
        else:
            wit = list(wit)
        out[name] = {"value": res[0], "witness": wit}
    if rep.errors:
        out["skipped"] = rep.errors
    return out


def _parse_parts(text: str) -> list[set[int]]:
    return [{int(v) for v in part.split(",") if v.strip()} for part in text.split(";") if part.strip()]


def _cmd_reduce(cfg: RunConfig, item: str, index: int) -> dict:
    g = _graph(cfg, item)
    opts = cfg.options
    if opts["kind"] == "is":
        ri = reduce_is(g, opts["k"] if opts.get("k") is not None else max(1, g.n // 2))
    else:
        parts = _parse_parts(opts["parts"]) if opts.get("parts") else clique_cover_number(g)[1]
        ri = reduce_mcis(g, parts)
    out = {"kind": ri.kind, "k": ri.k, "target": write_graph6(ri.target), "b": ri.b, "sidecar": ri.sidecar()}
    if opts.get("out"):
        # later graphs of a stream get numbered stems
        out["files"] = list(ri.write(opts["out"] + (f"_{index}" if index else "")))
    if opts.get("check"):
        out["equivalent"] = check_equivalence(ri)
    return out


def _cmd_gap(cfg: RunConfig, item: str, index: int) -> dict:
    g = _graph(cfg, item)
    r = solve(g, cfg.budget_edges)
    return {"n": g.n, "m": g.m, "alpha": r.alpha, "obn": r.value, "gap": r.value - r.alpha, "method": r.method}


COMMANDS: dict[str, Callable[[RunConfig, str, int], dict]] = {
    "bn": _cmd_bn,
    "obn": _cmd_obn,
    "bounds": _cmd_bounds,
    "invariants": _cmd_invariants,
    "reduce": _cmd_reduce,
    "gapsearch": _cmd_gap,
}


def process(cfg: RunConfig, item: str, index: int = 0) -> dict:
    """One input item to one record; failures become error records."""
    rec: dict[str, Any] = {"schema": SCHEMA_VERSION, "input": _label(cfg, item)}
    try:
        rec.update(COMMANDS[cfg.command](cfg, item, index))
    except (ObnError, ValueError) as exc:
        rec["error"] = type(exc).__name__
        rec["message"] = str(exc)
        if isinstance(exc, BudgetExceeded) and exc.partial is not None:
            rec["bracket"] = [exc.partial.lower, exc.partial.upper]
    return rec


def _worker(args):
    return process(*args)


def ordered_map(cfg: RunConfig, items: Iterable[str]) -> Iterator[dict]:
    """``process`` over items, in input order, with at most ``4 * jobs`` in flight."""
    if cfg.jobs <= 1 or cfg.fmt != "graph6":
        for i, item in enumerate(items):
            yield process(cfg, item, i)
        return
    # per-line parallelism; the solver itself stays single-process in workers
    inner = RunConfig(**{**cfg.__dict__, "jobs": 1})
    with ProcessPoolExecutor(cfg.jobs) as pool:
        window: deque = deque()
        for i, item in enumerate(items):
            window.append(pool.submit(_worker, (inner, item, i)))
            if len(window) >= 4 * cfg.jobs:
                yield window.popleft().result()
        while window:
            yield window.popleft().result()


# --- output -------------------------------------------------------------------------

def _text(rec: dict) -> str:
    head = rec["input"]
    if "error" in rec:
        return f"{head}\tERROR {rec['error']}: {rec['message']}"
    body = " ".join(f"{k}={v}" for k, v in rec.items() if k not in ("schema", "input"))
    return f"{head}\t{body}"


def _emit(cfg: RunConfig, rec: dict, out) -> None:
    print(json.dumps(rec, separators=(",", ":")) if cfg.json else _text(rec), file=out, flush=True)


def run(cfg: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    if cfg.command == "selftest":
        return 0 if selftest.run(cfg.seed, out) else 1

    items = _read_items(cfg)
    errors = 0
    total = 0
    best_gap = None
    witnesses: list[str] = []
    for rec in ordered_map(cfg, items):
        total += 1
        if cfg.command == "gapsearch" and "error" not in rec:
            gap = rec["gap"]
            if best_gap is None or gap > best_gap:
                best_gap, witnesses = gap, []
            if gap == best_gap:
                witnesses.append(rec["input"])
            rec["running_max"] = best_gap
            if gap > 2:
                rec["flag"] = "GAP_EXCEEDS_2"
                print(f"!!! obn - alpha = {gap} > 2 on {rec['input']}", file=err, flush=True)
        if "error" in rec:
            errors += 1
        _emit(cfg, rec, out)
        if "error" in rec and not cfg.keep_going:
            break

    if cfg.command == "gapsearch":
        summary = {"schema": SCHEMA_VERSION, "summary": "gapsearch", "graphs": total, "errors": errors,
                   "max_gap": best_gap, "witnesses": witnesses}
        print(json.dumps(summary) if cfg.json else
              f"# {total} graphs, max gap {best_gap}, {len(witnesses)} witnesses, {errors} errors", file=out)
    elif cfg.keep_going and errors:
        print(f"# {total} records, {errors} errors", file=err)
    return 1 if errors else 0


# --- argument parsing ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="graph6")
    common.add_argument("--json", action="store_true", help="one JSON object per line")
    common.add_argument("--budget-edges", type=int, default=None, metavar="N",
                        help="max edges for exhaustive orientation search (env OBN_BUDGET_EDGES)")
    common.add_argument("--odn-max-n", type=int, default=8, metavar="N")
    common.add_argument("--jobs", type=int, default=1, metavar="N")
    common.add_argument("--keep-going", action="store_true", help="continue past per-graph errors")
    common.add_argument("--seed", type=int, default=0, metavar="S")

    p = argparse.ArgumentParser(prog="obnkit", description="Orientable burning number toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    bn = sub.add_parser("bn", parents=[common], help="burning number of one orientation per graph")
    bn.add_argument("--mask", type=int, default=0, help="orientation mask when the input line has none")

    obn = sub.add_parser("obn", parents=[common], help="orientable burning number")
    mode = obn.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="always run the exhaustive search")
    mode.add_argument("--ke-only", action="store_true", help="refuse graphs that are not Konig-Egervary")
    mode.add_argument("--decision", type=int, default=None, metavar="B", help="answer obn >= B")

    bounds = sub.add_parser("bounds", parents=[common], help="bracket and individual bounds")
    bounds.add_argument("--domination", action="store_true", help="include the orientable domination bound")

    inv = sub.add_parser("invariants", parents=[common], help="classical invariants with witnesses")
    inv.add_argument("--which", default=None, help=f"comma list from {','.join(INVARIANTS)}")

    red = sub.add_parser("reduce", parents=[common], help="hardness gadgets")
    red.add_argument("--kind", choices=("is", "mcis"), default="is")
    red.add_argument("--k", type=int, default=None, help="target independent-set size (is)")
    red.add_argument("--parts", default=None, help="clique partition '0,1;2,3' (mcis)")
    red.add_argument("--out", default=None, metavar="STEM", help="write STEM.edges and STEM.json")
    red.add_argument("--check", action="store_true", help="verify the equivalence by brute force")

    sub.add_parser("gapsearch", parents=[common], help="obn - alpha over a stream, with running maximum")
    sub.add_parser("selftest", parents=[common], help="quick acceptance subset")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    skip = {"command", "input", "fmt", "json", "budget_edges", "odn_max_n", "jobs", "seed", "keep_going"}
    options = {k: v for k, v in vars(ns).items() if k not in skip}
    if options.get("which"):
        options["which"] = [w.strip() for w in options["which"].split(",") if w.strip()]
    return RunConfig(ns.command, ns.input, ns.fmt, ns.json, ns.budget_edges, ns.odn_max_n,
                     ns.jobs, ns.seed, ns.keep_going, options)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ValueError as exc:
        parser.error(str(exc))
    random.seed(cfg.seed)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
