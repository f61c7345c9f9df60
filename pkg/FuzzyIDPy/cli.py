"""Command line interface: ``fuzzyid <command> FILE ...``.

Reports go to stdout (or ``--out``) as deterministic JSON; logs go to stderr.
"""
import argparse
import io
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Union

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .client import FuzzyIDPy
from .errors import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, QueryError, ReportError
from .extremizer import STRATEGIES
from .parameters import membership_array
from .types import (
    MAXIMIZE, MINIMIZE,
    FuzzyProbability, FuzzyValue, InfluenceDiagram, MembershipCurve, Query, SolverReport
)
from .utils import CostExpr, ProbabilityExpr, format_number, parse_assignments, parse_expression

log = logging.getLogger(__name__)

PLOT_POINTS = 256
BOUNDARY_SEMANTICS = "constrained"


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with 64 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="fuzzyid", description="Fuzzy influence diagram engine.")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    parser.add_argument("--extremization", default="vertex", choices=STRATEGIES)
    parser.add_argument("--vertex-limit", type=int, default=4096)
    parser.add_argument("--workers", type=int, default=4)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    def command(name: str, help_text: str) -> ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("file", help="diagram document (.fid.json)")
        return sub

    validate = command("validate", "check a diagram file")
    validate.add_argument("--out", help="write the report here instead of stdout")

    infer = command("infer", "posterior fuzzy distribution of a chance node")
    infer.add_argument("--target", required=True)
    infer.add_argument("--given", action="append", default=[], metavar="N=o")
    infer.add_argument("--out")

    for name, help_text in (("decide", "fuzzy expected value of every alternative"),
                            ("sensitivity", "alpha* sensitivity of the decision")):
        sub = command(name, help_text)
        sub.add_argument("--given", action="append", default=[], metavar="N=o")
        sub.add_argument("--objective", choices=[MINIMIZE, MAXIMIZE], default=MINIMIZE)
        sub.add_argument("--out")
        if name == "sensitivity":
            sub.add_argument("--difference", action="store_true",
                             help="also check the sign of the cost difference on the oracle grid")
            sub.add_argument("--grid", type=int, default=None, help="oracle grid for --difference")

    plot = command("plot", "membership curve samples as CSV or SVG")
    plot.add_argument("--expr", required=True, help="P(T=t | N=o, ...) or E(D=d | N=o, ...)")
    plot.add_argument("--out", required=True, help="output path ending in .csv or .svg")
    plot.add_argument("--points", type=int, default=PLOT_POINTS)
    plot.add_argument("--oracle", type=int, default=None, metavar="GRID_N",
                      help="overlay the oracle curve at this grid size")

    check = command("check", "compare the engine with the brute force oracle")
    check.add_argument("--expr", required=True)
    check.add_argument("--grid", type=int, default=101)
    check.add_argument("--bins", type=int, default=256)
    check.add_argument("--tol-support", type=float, default=0.02)
    check.add_argument("--tol-membership", type=float, default=0.15)
    check.add_argument("--band", type=float, default=0.02)
    check.add_argument("--out")
    return parser


def engine_result(engine: FuzzyIDPy, diagram: InfluenceDiagram,
                  expression: Union[ProbabilityExpr, CostExpr]) -> Union[FuzzyProbability, FuzzyValue]:
    """The engine's fuzzy answer for a query expression."""
    if isinstance(expression, ProbabilityExpr):
        return engine.infer(diagram, Query(expression.target, expression.evidence))[expression.outcome]
    policy = engine.decide(diagram, dict(expression.evidence))
    if expression.decision != policy.decision:
        raise QueryError(f"{expression.decision} is not the decision node {policy.decision}")
    if expression.alternative not in policy.expected:
        raise QueryError(f"Unknown alternative {expression.alternative!r} for {policy.decision}")
    return policy.expected[expression.alternative]


def _validate(engine: FuzzyIDPy, diagram: InfluenceDiagram, args) -> SolverReport:
    return SolverReport("validate").add("valid", True).add("diagram", {
        "nodes": [{"name": n.name, "kind": n.kind, "parents": list(n.parents)} for n in diagram.nodes],
        "arcs": len(diagram.arcs)
    })


def _infer(engine: FuzzyIDPy, diagram: InfluenceDiagram, args) -> SolverReport:
    query = Query(args.target, parse_assignments(args.given))
    distribution, counter = engine.solve_query(diagram, query)
    return (
        SolverReport("infer")
        .add("query", query.to_dict())
        .add("distribution", {label: p.to_dict() for label, p in distribution.items()})
        .add("boundary_semantics", BOUNDARY_SEMANTICS)
        .add("op_counter", counter.to_dict())
    )


def _decide(engine: FuzzyIDPy, diagram: InfluenceDiagram, args) -> SolverReport:
    policy = engine.decide(diagram, parse_assignments(args.given), args.objective)
    return SolverReport("decide").add("policy", policy.to_dict())


def _sensitivity(engine: FuzzyIDPy, diagram: InfluenceDiagram, args) -> SolverReport:
    report = engine.sensitivity(
        diagram, parse_assignments(args.given), args.difference, args.grid, args.objective
    )
    return (
        SolverReport("sensitivity")
        .add("given", parse_assignments(args.given))
        .add("objective", args.objective)
        .add("sensitivity", report.to_dict())
    )


def _samples(result, points: int, curve: Optional[MembershipCurve]) -> np.ndarray:
    lower, upper = result.support
    if curve is not None:
        lower, upper = min(lower, curve.support[0]), max(upper, curve.support[1])
    if upper - lower <= 0.0:
        pad = max(abs(result.mean), 1.0) * 0.01
        lower, upper = lower - pad, upper + pad
    return np.linspace(lower, upper, points)


def curve_csv(result, points: int, curve: Optional[MembershipCurve] = None) -> str:
    """``x,membership[,oracle_membership]`` rows for ``points`` evenly spaced x."""
    xs = _samples(result, points, curve)
    memberships = membership_array(result, xs)
    out = io.StringIO()
    out.write("x,membership,oracle_membership\n" if curve is not None else "x,membership\n")
    for x, mu in zip(xs, memberships):
        row = [format_number(float(x)), format_number(float(mu))]
        if curve is not None:
            row.append(format_number(curve.membership_at(float(x))))
        out.write(",".join(row) + "\n")
    return out.getvalue()


def write_svg(path: Path, text: str, title: str) -> None:
    """Static SVG plot with the CSV samples embedded as its description."""
    rows = [line.split(",") for line in text.strip().splitlines()[1:]]
    table = np.array(rows, dtype=float)
    plt.rcParams["svg.hashsalt"] = "fuzzyid"
    figure, axes = plt.subplots(figsize=(6, 4))
    axes.plot(table[:, 0], table[:, 1], label="engine")
    if table.shape[1] > 2:
        axes.step(table[:, 0], table[:, 2], where="mid", label="oracle", alpha=0.7)
        axes.legend()
    axes.set_title(title)
    axes.set_xlabel("x")
    axes.set_ylabel("membership")
    axes.set_ylim(0.0, 1.05)
    figure.savefig(path, format="svg", metadata={"Date": None, "Description": text})
    plt.close(figure)


def _plot(engine: FuzzyIDPy, diagram: InfluenceDiagram, args) -> SolverReport:
    out = Path(args.out)
    expression = parse_expression(args.expr)
    result = engine_result(engine, diagram, expression)
    curve = engine.ep_curve(diagram, expression, args.oracle) if args.oracle else None
    text = curve_csv(result, args.points, curve)
    try:
        if out.suffix.lower() == ".csv":
            out.write_text(text, encoding="utf-8")
        else:
            write_svg(out, text, str(expression))
    except OSError as e:
        raise ReportError(f"Cannot write {out}: {e}")
    return (
        SolverReport("plot")
        .add("expression", str(expression))
        .add("result", result.to_dict())
        .add("plot", {"path": out.name, "points": args.points, "oracle_grid": args.oracle})
    )


def _check(engine: FuzzyIDPy, diagram: InfluenceDiagram, args) -> SolverReport:
    expression = parse_expression(args.expr)
    result = engine_result(engine, diagram, expression)
    curve = engine.ep_curve(diagram, expression, args.grid, args.bins)
    agreement = engine.compare(result, curve, args.tol_support, args.tol_membership, args.band)
    return (
        SolverReport("check")
        .add("expression", str(expression))
        .add("result", result.to_dict())
        .add("oracle", curve.to_dict())
        .add("agreement", agreement.to_dict())
    )


COMMANDS = {
    "validate": _validate,
    "infer": _infer,
    "decide": _decide,
    "sensitivity": _sensitivity,
    "plot": _plot,
    "check": _check
}


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def parse_args(parser: ArgumentParser, argv: Optional[Sequence[str]]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if args.command == "plot":
        if Path(args.out).suffix.lower() not in (".csv", ".svg"):
            parser.error(f"--out must end in .csv or .svg, got {args.out}")
        if args.points < 2:
            parser.error(f"--points must be at least 2, got {args.points}")
    return args


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parse_args(parser, argv)
        engine = FuzzyIDPy(extremization=args.extremization, vertex_limit=args.vertex_limit, workers=args.workers)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    except ValueError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"fuzzyid: error: {e}\n")
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True
    )
    report_out = None if args.command == "plot" else args.out

    def run() -> SolverReport:
        log.debug(f"Running {args.command} on {args.file}")
        diagram = engine.parse_file(args.file)
        return COMMANDS[args.command](engine, diagram, args)

    result = engine.with_error_handling(run)
    if isinstance(result, dict):
        error = SolverReport(args.command).add("error", {
            key: value for key, value in result.items() if key in ("error", "description", "errors", "parameters")
        })
        _emit(error.to_json(), report_out)
        return result["error_code"]

    _emit(result.to_json(), report_out)
    if args.command == "check" and not result.sections["agreement"]["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def run(argv: List[str] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
