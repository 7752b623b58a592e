"""Single command-line entry point over the file formats.

Subcommands: solve, reduce, clique, verify, roundtrip, gen-graph.  Stdout is
machine-parseable (`key value...` lines only); diagnostics go to stderr.

Exit codes:
    0  success / positive decision
    1  usage error
    2  parse or validation error
    3  negative decision (no clique, invalid or over-budget solution,
       failed roundtrip check)
    4  state bound exceeded
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import formats
from .cliquegraph import GraphValidationError, find_multicolored_clique
from .errors import StateBoundExceeded
from .harness import full_case_check
from .reduction import reduce_graph
from .solvers import SolverChoice, solve
from .stringcore import verify_solution

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NEGATIVE = 3
EXIT_BOUND = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"probability {value} not in [0, 1]")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cpat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance file exactly")
    p.add_argument("--instance", required=True, type=Path)
    p.add_argument("--solver", choices=["pattern-enum", "offset-enum"], default="pattern-enum")
    p.add_argument("--all-optimal", action="store_true")
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    p = sub.add_parser("reduce", help="turn a colored graph into an instance")
    p.add_argument("--graph", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)

    p = sub.add_parser("clique", help="brute-force multicolored clique search")
    p.add_argument("--graph", required=True, type=Path)

    p = sub.add_parser("verify", help="recheck a solution file")
    p.add_argument("--instance", required=True, type=Path)
    p.add_argument("--solution", required=True, type=Path)

    p = sub.add_parser("roundtrip", help="run every check on one graph")
    p.add_argument("--graph", required=True, type=Path)
    p.add_argument("--figures", type=Path, default=None, metavar="DIR")
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    p = sub.add_parser("gen-graph", help="write a seeded random graph")
    p.add_argument("--k", required=True, type=_positive)
    p.add_argument("--n", required=True, type=_positive)
    p.add_argument("--p", required=True, type=_probability)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", required=True, type=Path)

    return parser


def _cmd_solve(args) -> int:
    instance = formats.load_instance(args.instance)
    choice = SolverChoice(kind=args.solver, enumerate_all_optima=args.all_optimal)
    kwargs = {"threads": args.threads} if args.solver == "pattern-enum" else {}
    result = solve(instance, choice, **kwargs)
    print(f"solver {args.solver}")
    print(f"optimum {result.optimum}")
    for sol in result.solutions:
        sys.stdout.write(formats.render_solution(sol, instance.alphabet))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    g = formats.load_graph(args.graph)
    red = reduce_graph(g)
    formats.dump(args.out, formats.render_instance(red.instance, reduction=red))
    print(f"threshold {red.threshold}")
    return EXIT_OK


def _cmd_clique(args) -> int:
    g = formats.load_graph(args.graph)
    sel = find_multicolored_clique(g)
    if sel is None:
        print("none")
        return EXIT_NEGATIVE
    print("clique " + " ".join(g.selection_names(sel)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    instance = formats.load_instance(args.instance)
    sol = formats.load_solution(args.solution, instance)
    report = verify_solution(instance, sol)
    for problem in report.problems:
        print(problem, file=sys.stderr)
    if report.recomputed_cost is not None:
        print(f"cost {report.recomputed_cost}")
    print(f"valid {'true' if report.valid else 'false'}")
    if report.within_budget is not None:
        print(f"within_budget {'true' if report.within_budget else 'false'}")
    ok = report.valid and report.within_budget is not False
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_roundtrip(args) -> int:
    g = formats.load_graph(args.graph)
    checks = full_case_check(g, threads=args.threads)
    lines = [f"case {c.name} {'pass' if c.passed else 'fail'}" for c in checks]
    passed = sum(c.passed for c in checks)
    lines.append(f"summary {passed} {len(checks) - passed}")
    all_ok = passed == len(checks)
    lines.append("equivalence holds" if all_ok else "equivalence fails")
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    for c in checks:
        if not c.passed and c.detail:
            print(f"{c.name}: {c.detail}", file=sys.stderr)
    if args.figures is not None:
        _write_figures(g, args.figures, text)
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def _write_figures(g, outdir: Path, report_text: str) -> None:
    from .figures import save_alignment_figure, save_graph_figure
    from .solvers import solve_by_pattern_enum

    outdir.mkdir(parents=True, exist_ok=True)
    red = reduce_graph(g)
    sel = find_multicolored_clique(g)
    save_graph_figure(g, sel, outdir / "graph.png")
    result = solve_by_pattern_enum(red.instance)
    save_alignment_figure(red.instance, result.solutions[0], outdir / "alignment.png")
    formats.dump(outdir / "report.txt", report_text)


def _cmd_gen_graph(args) -> int:
    from .cliquegraph import random_graph

    g = random_graph(args.k, args.n, args.p, args.seed)
    formats.dump(args.out, formats.render_graph(g))
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "reduce": _cmd_reduce,
    "clique": _cmd_clique,
    "verify": _cmd_verify,
    "roundtrip": _cmd_roundtrip,
    "gen-graph": _cmd_gen_graph,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except StateBoundExceeded as exc:
        print(f"state bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (formats.FormatError, GraphValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
