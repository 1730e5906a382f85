"""Command-line front end.

    tuttepoly tutte FILE [--format text|json]
    tuttepoly eval FILE X Y
    tuttepoly special FILE {chromatic,flow,reliability,badcoloring,sandpile,shelling,beta} [--sink Q]
    tuttepoly verify [FILE] [--catalog MAXV MAXE]

Exit codes: 0 ok, 1 verification mismatch, 2 bad input, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .engine import tutte, tutte_eval
from .errors import BudgetExceededError, GraphInputError
from .multigraph import MultiGraph, format_edge_list, read_edge_list
from .oracles import Budgets
from .polynomial import format_rational, parse_rational
from . import sandpile as sp
from . import specializations as spz
from . import verify as vf

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _budgets(args: argparse.Namespace) -> Budgets:
    return Budgets(max_subsets=args.max_subsets, max_orientations=args.max_orientations, max_configs=args.max_configs)


def _poly_out(poly, variables: tuple[str, ...], fmt: str, kind: str) -> str:
    if fmt == "json":
        return json.dumps({"kind": kind, "variables": list(variables), "terms": poly.to_json_obj()})
    return poly.to_string(*variables)


def cmd_tutte(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    print(_poly_out(tutte(g), ("x", "y"), args.format, "tutte"))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    try:
        x, y = parse_rational(args.x), parse_rational(args.y)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_rational(tutte_eval(g, x, y)))
    return EXIT_OK


def cmd_special(args: argparse.Namespace) -> int:
    which = args.which
    if which == "sandpile" and args.sink is None:
        raise UsageError("sandpile needs --sink Q")
    g = read_edge_list(args.file)
    budgets = _budgets(args)
    fmt = args.format
    if which == "sandpile":
        print(json.dumps(sp.sandpile_report(g, args.sink, budgets)))
        return EXIT_OK
    t = tutte(g)
    if which == "chromatic":
        print(_poly_out(spz.chromatic_polynomial(g, t), ("l",), fmt, which))
    elif which == "flow":
        print(_poly_out(spz.flow_polynomial(g, t), ("l",), fmt, which))
    elif which == "reliability":
        print(_poly_out(spz.reliability_polynomial(g, t), ("p",), fmt, which))
    elif which == "badcoloring":
        print(_poly_out(spz.bad_coloring_via_tutte(g, t), ("l", "t"), fmt, which))
    elif which == "shelling":
        h, h_star = spz.shelling_polynomials(g, t)
        if fmt == "json":
            print(json.dumps({"kind": which, "h": h.to_json_obj(), "h_star": h_star.to_json_obj()}))
        else:
            print(f"h(x) = {h.to_string('x')}")
            print(f"h*(y) = {h_star.to_string('y')}")
    elif which == "beta":
        beta = spz.beta_from_tutte(g, t)[0] if g.edge_count >= 2 else spz.beta_invariant(g, budgets)
        print(json.dumps({"kind": which, "beta": beta}) if fmt == "json" else beta)
    return EXIT_OK


def _verify_one(job):
    g, budgets = job
    return vf.verify_graph(g, budgets)


def _dump(g: MultiGraph) -> str:
    return "".join("  " + line + "\n" for line in format_edge_list(g).splitlines())


def cmd_verify(args: argparse.Namespace) -> int:
    budgets = _budgets(args)
    if (args.file is None) == (args.catalog is None):
        raise UsageError("give either FILE or --catalog MAXV MAXE")
    failed = False
    if args.file is not None:
        g = read_edge_list(args.file)
        results = vf.verify_graph(g, budgets)
        for r in results:
            tag = "PASS" if r.passed else "FAIL"
            print(f"{tag}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
            failed |= not r.passed
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        if failed:
            print("counterexample graph:")
            print(_dump(g), end="")
        return EXIT_MISMATCH if failed else EXIT_OK

    from .catalog import connected_catalog

    maxv, maxe = args.catalog
    graphs = connected_catalog(maxv, maxe)
    jobs = [(g, budgets) for g in graphs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            all_results = list(pool.map(_verify_one, jobs, chunksize=16))
    else:
        all_results = [_verify_one(j) for j in jobs]
    tally: dict[str, list[int]] = {}
    bad: list[tuple[MultiGraph, list[vf.CheckResult]]] = []
    for g, results in zip(graphs, all_results):
        for r in results:
            tally.setdefault(r.name, [0, 0])[0 if r.passed else 1] += 1
        fails = [r for r in results if not r.passed]
        if fails:
            bad.append((g, fails))
    for r in vf.verify_dual_pairs():
        tally.setdefault(r.name, [0, 0])[0 if r.passed else 1] += 1
        if not r.passed:
            failed = True
            print(f"FAIL  {r.name}: {r.detail}")
    for name, (ok, ko) in tally.items():
        print(f"{'PASS' if not ko else 'FAIL'}  {name}  [{ok} passed, {ko} failed]")
    print(f"{len(graphs)} catalog graphs (<= {maxv} vertices, <= {maxe} edges)")
    for g, fails in bad:
        print("counterexample graph:")
        print(_dump(g), end="")
        for r in fails:
            print(f"    {r.name}: {r.detail}")
    return EXIT_MISMATCH if (bad or failed) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-subsets", type=int, default=1 << 20, help="edge-subset budget (default 2^20)")
    common.add_argument("--max-orientations", type=int, default=1 << 20, help="orientation budget (default 2^20)")
    common.add_argument("--max-configs", type=int, default=10**6, help="colouring / sandpile budget (default 10^6)")
    parser = argparse.ArgumentParser(prog="tuttepoly", description="Exact Tutte polynomials of multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", parents=[common], help="print T(G; x, y)")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("eval", parents=[common], help="evaluate T at a rational point, e.g. 1/2 -3")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("special", parents=[common], help="a specialization of T")
    p.add_argument("file")
    p.add_argument("which", choices=("chromatic", "flow", "reliability", "badcoloring", "sandpile", "shelling", "beta"))
    p.add_argument("--sink", type=int, default=None, help="sink vertex (sandpile only)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("verify", parents=[common], help="cross-check the engine against the oracles")
    p.add_argument("file", nargs="?")
    p.add_argument("--catalog", nargs=2, type=int, metavar=("MAXV", "MAXE"))
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --catalog")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
