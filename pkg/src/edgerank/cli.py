"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 invalid graph or unknown label,
3 measure undefined on the graph, 4 counterexample found.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .axioms import AXIOMS, FIXTURES, TrialConfig, fixtures, random_graph, satisfaction_matrix, search
from .centrality import (
    MeasureSpec,
    SolverConfig,
    iter_measures,
    node_pagerank,
    random_surfer,
    rank_incoming,
    score,
)
from .errors import ClassViolation, ConvergenceError, GraphError
from .linegraph import heuchenne_check, heuchenne_witnesses, line_graph
from .multigraph import dump_graph, load_graph

EXIT_OK, EXIT_USAGE, EXIT_GRAPH, EXIT_UNDEFINED, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed() -> int:
    raw = os.environ.get("EDGERANK_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"EDGERANK_SEED must be an integer, got {raw!r}") from None


def _solver(args) -> SolverConfig:
    try:
        return SolverConfig(args.tol, args.max_iter)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(args) -> MeasureSpec:
    try:
        return MeasureSpec(args.measure, args.alpha, _solver(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, path=None):
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _table(rows, header) -> str:
    rows = [header] + rows
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(header))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _fmt2(v):
    return "undefined" if v is None else f"{v:.2f}"


# --- commands ------------------------------------------------------------

def cmd_compute(args) -> int:
    spec = _spec(args)
    if args.nodes and spec.kind != "edge-pagerank":
        raise UsageError("--nodes is only available for pagerank")
    g = load_graph(args.input)
    if args.nodes:
        scores = node_pagerank(g, spec.decay, spec.solver)
        rows = [[v, _fmt2(scores[v])] for v in scores]
        header = ["node", "score"]
    else:
        scores = score(spec, g)
        rows = [[e, g.start(e), g.end(e), _fmt2(scores[e])] for e in scores]
        header = ["edge", "from", "to", "score"]
    if args.format == "json":
        _write(json.dumps(scores.to_dict(), indent=2))
    elif args.format == "csv":
        _write(scores.to_csv())
    else:
        _write(_table(rows, header))
    return EXIT_OK


def cmd_rank(args) -> int:
    spec = _spec(args)
    g = load_graph(args.input)
    ranked = rank_incoming(g, args.incoming, spec)
    if args.format == "json":
        _write(json.dumps([{"id": e, "value": v} for e, v in ranked], indent=2))
    elif args.format == "csv":
        _write("\n".join(["id,value"] + [f"{e},{'undefined' if v is None else repr(v)}"
                                         for e, v in ranked]))
    elif ranked:
        _write(_table([[e, g.start(e), _fmt2(v)] for e, v in ranked], ["edge", "from", "score"]))
    return EXIT_OK


def cmd_surf(args) -> int:
    if args.walks < 1:
        raise UsageError("--walks must be at least 1")
    if not 0 <= args.alpha < 1:
        raise UsageError(f"decay factor must lie in [0, 1), got {args.alpha}")
    g = load_graph(args.input)
    try:
        est = random_surfer(g, args.alpha, args.walks, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _write(json.dumps(est.to_dict(), indent=2))
    elif args.format == "csv":
        _write("\n".join(["id,value,stderr"] + [f"{e},{v!r},{est.stderr[e]!r}" for e, v in est.items()]))
    else:
        _write(_table([[e, f"{v:.4f}", f"{est.stderr[e]:.4f}"] for e, v in est.items()],
                      ["edge", "estimate", "stderr"]))
    return EXIT_OK


def _trial_config(args) -> TrialConfig:
    try:
        return TrialConfig(
            trials=args.trials,
            seed=args.seed,
            n_range=(args.n_min, args.n_max),
            m_range=(args.m_min, args.m_max),
            w_max=args.w_max,
            allow_self_loops=not args.no_self_loops,
            allow_parallel=not args.no_parallel,
            tol_check=args.tol_check,
            tol_solver=args.tol_solver,
            tol_pre=args.tol_pre,
            max_sites=args.max_sites,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args) -> int:
    cfg = _trial_config(args)
    try:
        spec = MeasureSpec(args.measure, args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.axiom == "all":
        axioms = list(AXIOMS)
    elif args.axiom in AXIOMS:
        axioms = [args.axiom]
    else:
        raise UsageError(f"unknown axiom {args.axiom!r}; choose from all, {', '.join(AXIOMS)}")
    reports = [search(spec, a, cfg) for a in axioms]
    found = any(r.counterexample is not None for r in reports)
    if args.format == "json":
        _write(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        rows = []
        for r in reports:
            worst = r.counterexample.max_discrepancy if r.counterexample else r.max_pass_discrepancy
            rows.append([r.measure, r.axiom, r.summary(), f"{worst:.3g}"])
        _write(_table(rows, ["measure", "axiom", "result", "max discrepancy"]))
        for r in reports:
            if r.counterexample is not None:
                _write(f"\ncounterexample for {r.axiom}:\n"
                       + json.dumps(r.counterexample.witness, indent=2, ensure_ascii=False))
    return EXIT_COUNTEREXAMPLE if found else EXIT_OK


def cmd_matrix(args) -> int:
    cfg = _trial_config(args)
    try:
        measures = list(iter_measures(katz_decay=args.katz_alpha, pagerank_decay=args.pagerank_alpha))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    mx = satisfaction_matrix(cfg, measures)
    if args.format == "json":
        _write(json.dumps(mx.to_dict(), indent=2, ensure_ascii=False))
    else:
        _write(mx.render())
        _write(f"\n'ok' = no counterexample in {cfg.trials} trials (bounded evidence, not proof)")
    found = any(c.counterexample is not None for c in mx.cells.values())
    return EXIT_COUNTEREXAMPLE if found else EXIT_OK


def cmd_linegraph(args) -> int:
    g = load_graph(args.input)
    res = line_graph(g)
    _write(dump_graph(res.graph), args.output)
    sidecar = args.provenance
    if sidecar is None and args.output not in (None, "-"):
        sidecar = str(Path(args.output).with_suffix("")) + ".provenance.json"
    if sidecar is not None:
        _write(json.dumps(res.provenance_dict(), indent=2, ensure_ascii=False), sidecar)
    return EXIT_OK


def cmd_heuchenne(args) -> int:
    g = load_graph(args.input)
    found = list(heuchenne_witnesses(g)) if args.all else [w for w in [heuchenne_check(g)] if w]
    if not found:
        _write("ok")
    for w in found:
        _write(f"witness a={w.a} c={w.c} b={w.b} d={w.d}")
    return EXIT_OK


def cmd_fixture(args) -> int:
    params = {k: getattr(args, k) for k in ("x", "y", "k", "a") if getattr(args, k) is not None}
    fx = fixtures(args.name, **params)
    _write(dump_graph(fx.graph), args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = _trial_config(args)
    cls = {"katz": "katz-admissible"}.get(args.graph_class, args.graph_class)
    if cls == "katz-admissible" and args.alpha is None:
        raise UsageError("--class katz needs --alpha")
    g = random_graph(cfg, args.seed, cls, args.alpha)
    _write(dump_graph(g), args.output)
    return EXIT_OK


# --- parser --------------------------------------------------------------

def _add_measure(p):
    p.add_argument("--measure", required=True,
                   help="pagerank, eigenedge, katz, seeley, betweenness, information or gtom")
    p.add_argument("--alpha", type=float, help="decay factor (pagerank, katz)")


def _add_solver(p):
    p.add_argument("--tol", type=float, default=1e-12, help="solver tolerance (default 1e-12)")
    p.add_argument("--max-iter", type=int, default=100_000, help="solver iteration cap")


def _add_format(p, default="json"):
    p.add_argument("--format", choices=["json", "csv", "table"], default=default)


def _add_trials(p, trials, seed):
    p.add_argument("--trials", type=int, default=trials)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=16)
    p.add_argument("--w-max", type=float, default=5.0)
    p.add_argument("--no-self-loops", action="store_true")
    p.add_argument("--no-parallel", action="store_true")
    p.add_argument("--tol-check", type=float, default=1e-6)
    p.add_argument("--tol-solver", type=float, default=1e-12)
    p.add_argument("--tol-pre", type=float, default=1e-10)
    p.add_argument("--max-sites", type=int, default=None,
                   help="cap on transformation sites checked per trial")


def build_parser(seed: int = 0) -> argparse.ArgumentParser:
    parser = _Parser(prog="edgerank", description="Edge centrality measures and axiom checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="score every edge of a graph")
    _add_measure(p)
    p.add_argument("--input", required=True)
    p.add_argument("--nodes", action="store_true", help="print node PageRank instead")
    _add_format(p)
    _add_solver(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("rank", help="rank the incoming edges of a node")
    _add_measure(p)
    p.add_argument("--incoming", required=True, metavar="NODE")
    p.add_argument("--input", required=True)
    _add_format(p, "table")
    _add_solver(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("surf", help="Monte-Carlo random-surfer estimate of Edge PageRank")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--walks", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--input", required=True)
    _add_format(p, "table")
    p.set_defaults(func=cmd_surf)

    p = sub.add_parser("check", help="search for counterexamples to the axioms")
    _add_measure(p)
    p.add_argument("--axiom", default="all")
    _add_trials(p, 500, seed)
    _add_format(p, "table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("matrix", help="measure-by-axiom satisfaction table")
    _add_trials(p, 1000, seed)
    p.add_argument("--pagerank-alpha", type=float, default=0.85)
    p.add_argument("--katz-alpha", type=float, default=0.25)
    _add_format(p, "table")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("linegraph", help="line digraph with a provenance sidecar")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="graph JSON path (default stdout)")
    p.add_argument("--provenance", help="sidecar path (default <output>.provenance.json)")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("heuchenne", help="look for a line-digraph closure violation")
    p.add_argument("--input", required=True)
    p.add_argument("--all", action="store_true", help="list every witness")
    p.set_defaults(func=cmd_heuchenne)

    p = sub.add_parser("fixture", help="write a named construction graph")
    p.add_argument("--name", required=True, choices=sorted(FIXTURES))
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=float, help="decay factor for swap-pair")
    p.add_argument("--output")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("gen", help="write a random graph")
    p.add_argument("--class", dest="graph_class", default="all",
                   choices=["all", "strongly-connected", "katz"])
    p.add_argument("--alpha", type=float, help="decay factor for --class katz")
    _add_trials(p, 1, seed)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser(_default_seed()).parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"edgerank: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"edgerank: invalid-graph: {exc}", file=sys.stderr)
        return EXIT_GRAPH
    except (ClassViolation, ConvergenceError) as exc:
        print(f"edgerank: undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except OSError as exc:
        print(f"edgerank: io: {exc}", file=sys.stderr)
        return EXIT_GRAPH


if __name__ == "__main__":
    sys.exit(main())
