"""``rainbow-kit`` command line.

Exit codes: 0 when every check passed, 1 when a violation was found, 2 for
usage or input errors. With ``--json`` every command prints one JSON document
carrying ``schema_version`` and the full invocation.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, ecgio
from .constructions import boost_min_color_degree, rainbow_complete_bipartite, random_colored_graph
from .finder import FALLBACK_CAP, find_rainbow_cycle
from .graph import GraphError, WitnessError, min_color_degree
from .minimality import check_no_mono_3path, edge_minimal_reduce
from .probe import ProbeConfig, probe_counterexample
from .search import count_rainbow_cycles, find_rainbow_cycle_exact
from .separation import PreconditionError, separation_report
from .verify import run_property_suite, verify_delta_bound, verify_theorem_small

SCHEMA_VERSION = 1

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

class UsageError(Exception):
    pass


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=default(0), help="random seed (default 0)")
    parser.add_argument("--threads", type=int, default=default(1), help="worker process cap (default 1)")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="print a JSON report instead of text")
    parser.add_argument("-v", "--verbose", action="count", default=default(0))


def _read_ints(path: str) -> list[int]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0]
        out.extend(int(tok) for tok in line.replace(",", " ").split())
    return out


def _load(path: str):
    if path == "-":
        return ecgio.loads(sys.stdin.read())
    return ecgio.read_ecg(path)


def _emit_graph(g, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(ecgio.dumps(g))
    else:
        ecgio.write_ecg(g, out)


def _write_json(path: str, doc: dict) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def _envelope(args, result: dict) -> dict:
    params = {k: v for k, v in vars(args).items() if k not in ("handler", "verbose", "argv")}
    return {"schema_version": SCHEMA_VERSION, "tool": f"rainbow-kit {__version__}",
            "command": args.command, "invocation": {"argv": list(args.argv), "args": params}, "result": result}


def _witness_text(w) -> str:
    return (f"rainbow {len(w.vertices)}-cycle: {' '.join(map(str, w.vertices))}\n"
            f"colors: {' '.join(map(str, w.colors))}")


# -- commands ----------------------------------------------------------------

def cmd_gen(args):
    if args.family == "bipartite":
        g = rainbow_complete_bipartite(args.a, args.b)
    else:
        g = random_colored_graph(args.n, args.p, args.palette, args.seed, distinct=args.distinct)
        if args.boost is not None:
            g = boost_min_color_degree(g, args.boost, args.seed + 1)
    if args.json and not args.output:
        return EXIT_OK, {"ecg": ecgio.dumps(g), "n": g.n, "m": g.num_edges}, None
    _emit_graph(g, args.output)
    info = {"n": g.n, "m": g.num_edges, "output": args.output,
            "min_color_degree": min_color_degree(g) if g.n else 0}
    return EXIT_OK, info, None if args.output is None else f"wrote {args.output}: n={g.n} m={g.num_edges}"


def cmd_reduce(args):
    g = _load(args.input)
    h = edge_minimal_reduce(g)
    _emit_graph(h, args.output)
    info = {"n": g.n, "edges_before": g.num_edges, "edges_after": h.num_edges,
            "min_color_degree": min_color_degree(g) if g.n else 0,
            "no_mono_3path": check_no_mono_3path(h), "output": args.output}
    text = f"removed {g.num_edges - h.num_edges} of {g.num_edges} edges" if args.output else None
    return EXIT_OK, info, text


def cmd_stats(args):
    g = _load(args.input)
    X = _read_ints(args.set_file)
    Y = _read_ints(args.y_file) if args.y_file else [y for y in range(g.n) if y != args.anchor]
    rep = separation_report(g, args.anchor, X, Y)
    minimal = check_no_mono_3path(g)
    result = rep.to_dict()
    result["edge_minimal"] = minimal
    if args.report:
        _write_json(args.report, _envelope(args, result))
    # the inequality is only promised for edge-minimal graphs
    code = EXIT_VIOLATION if minimal and not rep.holds else EXIT_OK
    return code, result, json.dumps(result, indent=2)


def cmd_find(args):
    g = _load(args.input)
    result: dict = {"ell": args.ell, "n": g.n}
    if args.count:
        result["count"] = count_rainbow_cycles(g, args.ell, threads=args.threads)
        return EXIT_OK, result, f"{result['count']} rainbow {args.ell}-cycles"
    if args.exact:
        w = find_rainbow_cycle_exact(g, args.ell, threads=args.threads)
        result["complete"] = True
    else:
        w, trace = find_rainbow_cycle(g, args.ell)
        result["complete"] = trace.fallback_used
        result["case"] = trace.case
    result["witness"] = w.to_dict() if w else None
    if w is not None:
        text = _witness_text(w)
    elif result["complete"]:
        text = f"no rainbow {args.ell}-cycle"
    else:
        text = "none found (search incomplete; use --exact for a certificate)"
    return EXIT_OK, result, text


def cmd_prove(args):
    g = _load(args.input)
    w, trace = find_rainbow_cycle(g, args.ell, fallback=not args.no_fallback, fallback_cap=args.fallback_cap,
                                  record_sets=args.record_sets)
    result = trace.to_dict()
    if args.trace:
        _write_json(args.trace, _envelope(args, result))
    violation = w is None and trace.hypotheses_hold
    text = _witness_text(w) if w else f"no witness (case {trace.case}, outcome {trace.outcome})"
    if violation:
        text += "\nviolation: hypotheses hold but no rainbow cycle was produced"
    return (EXIT_VIOLATION if violation else EXIT_OK), result, text


def cmd_probe(args):
    cfg = ProbeConfig(fresh_prob=args.fresh_prob, absent_prob=args.absent_prob, t_start=args.t_start,
                      t_end=args.t_end, stagnation=args.stagnation)
    state = probe_counterexample(args.ell, args.n, args.budget, args.seed, args.init, args.chains,
                                 args.threads, cfg)
    result = state.to_dict()
    covered = args.ell == 3 or args.n >= 432 * args.ell + 1
    result["threshold"] = (args.n + 2) // 2
    result["counterexample"] = bool(covered and state.best_delta is not None
                                    and 2 * state.best_delta >= args.n + 1)
    if args.report:
        _write_json(args.report, _envelope(args, result))
    text = (f"best feasible delta: {state.best_delta} (threshold {result['threshold']}), "
            f"chain seed {state.seed}")
    return (EXIT_VIOLATION if result["counterexample"] else EXIT_OK), result, text


def cmd_verify(args):
    if args.suite == "theorem":
        rep = verify_theorem_small(args.ell, range(args.n_min, args.n_max + 1), args.samples, args.seed,
                                   threads=args.threads)
        lines = [f"n={r['n']}: {r['with_cycle']}/{r['samples']}{'' if r['claimed'] else ' (report only)'}"
                 for r in rep["rows"]]
    elif args.suite == "deltabound":
        rep = verify_delta_bound(args.ell, args.n_max, args.samples, args.seed, n_min=args.n_min,
                                    threads=args.threads)
        lines = [f"n={r['n']}: checked {r['checked']}, vacuous {r['vacuous']}, violations {r['violations']}"
                 for r in rep["rows"]]
    else:
        rep = run_property_suite(args.seed, args.size, threads=args.threads)
        lines = [f"{name}: pass {c['pass']} fail {c['fail']} vacuous {c['vacuous']}"
                 for name, c in rep["tallies"].items()]
    if args.report:
        _write_json(args.report, _envelope(args, rep))
    lines.append("ok" if rep["ok"] else "FAILED")
    return (EXIT_OK if rep["ok"] else EXIT_VIOLATION), rep, "\n".join(lines)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(prog="rainbow-kit", description="Rainbow cycles in edge-colored graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, handler, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_, formatter_class=fmt)
        p.set_defaults(handler=handler)
        return p

    p = add("gen", cmd_gen, "generate an instance")
    fam = p.add_subparsers(dest="family", required=True, metavar="FAMILY")
    b = fam.add_parser("bipartite", parents=[common], help="rainbow complete bipartite K_{a,b}", formatter_class=fmt)
    b.add_argument("--a", type=int, required=True)
    b.add_argument("--b", type=int, required=True)
    b.add_argument("-o", "--output")
    r = fam.add_parser("random", parents=[common], help="seeded random coloring", formatter_class=fmt)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--p", type=float, required=True, help="edge probability")
    r.add_argument("--palette", type=int, required=True, help="number of colors")
    r.add_argument("--distinct", action="store_true", help="color edges injectively")
    r.add_argument("--boost", type=int, help="add fresh-colored edges until every color degree reaches this")
    r.add_argument("-o", "--output")

    p = add("reduce", cmd_reduce, "edge-minimal reduction preserving the minimum color degree")
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("stats", cmd_stats, "separating/restricted color report for (v, X, Y)")
    p.add_argument("input")
    p.add_argument("--anchor", type=int, required=True)
    p.add_argument("--set-file", required=True, help="file listing X (a subset of N(anchor))")
    p.add_argument("--y-file", help="file listing Y (default: every vertex but the anchor)")
    p.add_argument("--report", help="also write the JSON report to this path")

    p = add("find", cmd_find, "find or count rainbow cycles")
    p.add_argument("input")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="complete backtracking search")
    p.add_argument("--count", action="store_true", help="count all rainbow ell-cycles")

    p = add("prove", cmd_prove, "run the constructive case-analysis finder")
    p.add_argument("input")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--trace", help="write the finder trace JSON to this path")
    p.add_argument("--no-fallback", action="store_true", help="never consult the exact search")
    p.add_argument("--fallback-cap", type=int, default=FALLBACK_CAP, help="largest n for the exact fallback")
    p.add_argument("--record-sets", action="store_true", help="include full vertex sets in the trace")

    d = ProbeConfig()
    p = add("probe", cmd_probe, "annealing search for dense colorings without rainbow ell-cycles")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, required=True, help="moves per chain")
    p.add_argument("--chains", type=int, default=1, help="independent chains, seeds seed..seed+chains-1")
    p.add_argument("--init", choices=("bipartite", "random"), default="bipartite", help="starting coloring")
    p.add_argument("--t-start", type=float, default=d.t_start, help="initial temperature")
    p.add_argument("--t-end", type=float, default=d.t_end, help="final temperature (geometric cooling)")
    p.add_argument("--stagnation", type=int, default=d.stagnation,
                   help="restart from the best state after this many moves without gain (0 disables)")
    p.add_argument("--fresh-prob", type=float, default=d.fresh_prob, help="chance a move uses a new color")
    p.add_argument("--absent-prob", type=float, default=d.absent_prob, help="chance a move deletes the edge")
    p.add_argument("--report", help="also write the JSON report to this path")

    p = add("verify", cmd_verify, "verification suites")
    suites = p.add_subparsers(dest="suite", required=True, metavar="SUITE")
    t = suites.add_parser("theorem", parents=[common], formatter_class=fmt,
                          help="boosted random instances must hold a rainbow cycle")
    t.add_argument("--ell", type=int, default=3)
    t.add_argument("--n-min", type=int, default=3)
    t.add_argument("--n-max", type=int, default=12)
    t.add_argument("--samples", type=int, default=100)
    t.add_argument("--report")
    c = suites.add_parser("deltabound", parents=[common], formatter_class=fmt,
                          help="color degree above n/2 + 3 ell forces a rainbow cycle")
    c.add_argument("--ell", type=int, default=3)
    c.add_argument("--n-min", type=int)
    c.add_argument("--n-max", type=int, default=16)
    c.add_argument("--samples", type=int, default=50)
    c.add_argument("--report")
    s = suites.add_parser("properties", parents=[common], formatter_class=fmt,
                          help="every counting inequality over an edge-minimal corpus")
    s.add_argument("--size", type=int, default=200, help="corpus size")
    s.add_argument("--report")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv = argv
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        code, result, text = args.handler(args)
    except (UsageError, ecgio.EcgFormatError, GraphError, WitnessError, PreconditionError,
            OSError, ValueError) as exc:
        print(f"rainbow-kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(_envelope(args, result), indent=2))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
