"""Batch command-line front-end.

Every pipeline stage is a subcommand with machine-readable output on
stdout; progress and diagnostics go to stderr.  Exit codes: 0 success,
1 computational inconsistency, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import geobound, mooreaut
from .equations import Mode, build_system
from .graphcore import (GraphClass, complete_bipartite, cycle_graph,
                        enumerate_graphs, graph6_decode, graph6_encode,
                        graph_from_key, path_graph)
from .oracle import build_fixture, census_csv, cross_validate
from .solve import (bound_free_parameter, solve_counts, table_to_csv)
from .spectra import SrgParams, feasibility_report

CLASS_NAMES = {
    "general": GraphClass.GENERAL,
    "triangle-free": GraphClass.TRIANGLE_FREE,
    "triangle-quad-free": GraphClass.TRIANGLE_QUAD_FREE,
}

MODE_NAMES = {
    "general": Mode.GENERAL,
    "triangle-free": Mode.TRIANGLE_FREE,
    "moore": Mode.MOORE,
}

PATTERN_NAMES = {
    "K1": lambda: path_graph(1),
    "K11": lambda: path_graph(2),
    "K12": lambda: path_graph(3),
    "P4": lambda: path_graph(4),
    "C5": lambda: cycle_graph(5),
    "K33": lambda: complete_bipartite(3, 3),
}


def _log(msg: str):
    print(msg, file=sys.stderr, flush=True)


def _parse_params(text: str) -> SrgParams:
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected n,k,lambda,mu")
    return SrgParams(*parts)


def _pattern(text: str):
    if text in PATTERN_NAMES:
        return PATTERN_NAMES[text]()
    return graph6_decode(text)


def cmd_enumerate(args) -> int:
    for g in enumerate_graphs(args.order, CLASS_NAMES[args.graph_class]):
        print(graph6_encode(g))
    return 0


def cmd_system(args) -> int:
    mode = MODE_NAMES[args.mode]
    counts = None
    if args.order > 3:
        _log(f"solving orders below {args.order} for the right-hand sides")
        counts = solve_counts(args.order - 1, mode).counts[args.order - 1]
    elif args.order == 3:
        from .equations import ModeContext
        counts = ModeContext(mode).seed_counts()
    system = build_system(args.order, mode, counts)
    print(system.to_json())
    return 0


def cmd_solve(args) -> int:
    mode = MODE_NAMES[args.mode]
    table = solve_counts(args.max_order, mode)
    payload = json.loads(table.to_json())
    if mode is Mode.MOORE and table.free_parameters:
        fp = table.free_parameters[0]
        b = bound_free_parameter(table, fp.symbol)
        payload["free_parameter_bound"] = {
            "symbol": fp.symbol,
            "graph6": graph6_encode(graph_from_key(fp.key)),
            "lower": str(b.lower), "upper": str(b.upper),
            "modulus": b.modulus, "residue": b.residue,
        }
        _log(f"free parameter {fp.symbol} "
             f"({graph6_encode(graph_from_key(fp.key))}) "
             f"bounded to [{b.lower}, {b.upper}]")
    print(json.dumps(payload, indent=1))
    return 0


def cmd_counts(args) -> int:
    p = args.params
    mode = MODE_NAMES[args.mode]
    free = {}
    for item in args.free or []:
        sym, _, val = item.partition("=")
        free[sym] = int(val)
    table = solve_counts(args.max_order, mode)
    sys.stdout.write(table_to_csv(table, p.k, p.lam, p.mu, free))
    return 0


def cmd_bounds(args) -> int:
    x = _pattern(args.x)
    rows = []
    if args.mode == "moore":
        _log("solving Moore counts through order 10")
        table = solve_counts(10, Mode.MOORE)
        for t in args.t:
            bound = geobound.petersen_bound(x, t, table)
            rows.append((SrgParams(3250, 57, 0, 1), args.x, "C5", t, bound))
    else:
        y = _pattern(args.y)
        max_order = x.order + y.order
        table = solve_counts(min(max_order, 6), Mode.TRIANGLE_FREE)
        for t in args.t:
            bound = geobound.k33_bound(args.params, x, y, t, table)
            rows.append((args.params, args.x, args.y, t, bound))
    sys.stdout.write(geobound.bounds_csv(rows))
    return 0


def cmd_moore_aut(args) -> int:
    if args.refined:
        sys.stdout.write(mooreaut.refined_table_markdown())
        return 0
    if args.base_table:
        sys.stdout.write(mooreaut.base_table_csv())
        return 0
    _log("solving Moore counts through order 10")
    table = solve_counts(max(args.order, 10), Mode.MOORE)
    residues = mooreaut.counts_mod_p(table, args.order, args.p)
    print(f"graph6,residue_mod_{args.p},symbol_residues")
    for key in sorted(residues):
        c0, syms = residues[key]
        print(f"{graph6_encode(graph_from_key(key))},{c0},"
              f"\"{syms if syms else ''}\"")
    return 0


def cmd_feasibility(args) -> int:
    print("n,k,lambda,mu,check,result")
    for p in args.params:
        try:
            rep = feasibility_report(p)
        except ValueError as exc:
            print(f"{p.n},{p.k},{p.lam},{p.mu},PARAMS,FAIL  # {exc}")
            continue
        checks = [("INTEGRALITY", rep.integrality),
                  ("KREIN1", rep.krein1), ("KREIN2", rep.krein2),
                  ("ABSOLUTE", rep.absolute_f and rep.absolute_g),
                  ("CONFERENCE", rep.conference_ok)]
        for name, ok in checks:
            print(f"{p.n},{p.k},{p.lam},{p.mu},{name},"
                  f"{'PASS' if ok else 'FAIL'}")
        print(f"{p.n},{p.k},{p.lam},{p.mu},OVERALL,"
              f"{'PASS' if rep.feasible else 'FAIL'}")
    return 0


def cmd_census(args) -> int:
    host = build_fixture(args.fixture)
    sys.stdout.write(census_csv(host, args.order))
    return 0


def cmd_verify(args) -> int:
    host = build_fixture(args.fixture)
    mode = Mode.TRIANGLE_FREE if host.params.lam == 0 else Mode.GENERAL
    _log(f"solving {mode.value} counts through order {args.max_order}")
    table = solve_counts(args.max_order, mode)
    report = cross_validate(host, args.max_order, table)
    if report.mismatches:
        for m in report.mismatches:
            print(f"MISMATCH {m}")
        return 1
    print(f"OK {args.fixture}: counts through order {args.max_order} "
          f"agree with the census (free values {report.free_values})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="srgkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="graph6 stream of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="graph_class", choices=CLASS_NAMES,
                   default="general")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("system", help="linear system for one order as JSON")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=MODE_NAMES, required=True)
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("solve", help="solution table as JSON")
    p.add_argument("--mode", choices=MODE_NAMES, required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("counts", help="integer counts at concrete params")
    p.add_argument("--mode", choices=MODE_NAMES, default="triangle-free")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--params", type=_parse_params, required=True,
                   metavar="n,k,lambda,mu")
    p.add_argument("--free", action="append", metavar="SYMBOL=VALUE")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("bounds", help="Cauchy-Schwarz count bounds")
    p.add_argument("--mode", choices=["triangle-free", "moore"],
                   default="triangle-free")
    p.add_argument("--params", type=_parse_params,
                   metavar="n,k,lambda,mu")
    p.add_argument("--x", required=True,
                   help="pattern name (K1,K11,K12,P4) or graph6")
    p.add_argument("--y", help="pattern name or graph6 (ignored for moore)")
    p.add_argument("--t", type=int, action="append", required=True,
                   help="Gegenbauer degree; repeatable")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("moore-aut", help="automorphism count congruences")
    p.add_argument("--p", type=int, default=7)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--base-table", action="store_true")
    p.add_argument("--refined", action="store_true",
                   help="order-7 refined a1 table")
    p.set_defaults(func=cmd_moore_aut)

    p = sub.add_parser("feasibility", help="parameter feasibility checks")
    p.add_argument("--params", type=_parse_params, action="append",
                   required=True, metavar="n,k,lambda,mu")
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("census", help="brute-force census of a fixture")
    p.add_argument("--fixture", required=True,
                   choices=["pentagon", "petersen", "clebsch",
                            "hoffman_singleton"])
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="cross-validate table vs census")
    p.add_argument("--fixture", required=True,
                   choices=["pentagon", "petersen", "clebsch",
                            "hoffman_singleton"])
    p.add_argument("--max-order", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "bounds" and args.mode != "moore":
        if args.params is None or args.y is None:
            ap.error("--params and --y are required unless --mode moore")
    try:
        return args.func(args)
    except (ArithmeticError, AssertionError) as exc:
        _log(f"inconsistency: {exc}")
        return 1
    except (ValueError, KeyError) as exc:
        _log(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
