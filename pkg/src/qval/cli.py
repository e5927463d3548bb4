"""Command-line interface.

Exit codes are stable for CI use: 0 on success / all properties pass,
1 when a property check fails (the counterexample report is printed as
JSON), 2 on usage errors (bad flags, malformed expressions or specs).
"""

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .approximation import solve_problem_file
from .errors import DomainError, ParseError, PrecisionExceededError
from .exprparse import format_element, parse_element
from .lemmas import LEMMA_IDS, run_lemma
from .quasi import check_axioms
from .qvspec import GRAMMAR_HELP, parse_qv
from .report import PropertyReport
from .sampling import ball_members, elements_for
from .topology import Ball, separation_witness
from .valuations import set_precision_cap

PRECISION_ENV = "QVAL_PRECISION_CAP"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qval",
        description="Exact quasi-valuations, their ultrametric balls, and "
        "simultaneous approximation over Q and Q(sqrt(d)).",
    )
    parser.add_argument(
        "--format", choices=("table", "json"), default="table",
        help="human-readable tables or machine-readable JSON",
    )
    parser.add_argument(
        "--precision-cap", type=int, default=None,
        help=f"Hensel precision cap (overrides ${PRECISION_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a quasi-valuation at an element")
    p_eval.add_argument("--qv", required=True, help=f"spec: {GRAMMAR_HELP}")
    p_eval.add_argument("expr", help="element expression, e.g. '3/4 + 5*sqrt(2)'")
    p_eval.set_defaults(handler=cmd_eval)

    p_ball = sub.add_parser("ball", help="membership table for an ultrametric ball")
    p_ball.add_argument("--qv", required=True)
    p_ball.add_argument("--center", required=True)
    p_ball.add_argument("--bound", required=True, help="rational bound, e.g. 1 or 3/2")
    p_ball.add_argument("--closed", action="store_true",
                        help="closed ball (w >= bound) instead of strict (w > bound)")
    p_ball.add_argument("members", nargs="+", help="elements to test")
    p_ball.set_defaults(handler=cmd_ball)

    p_axioms = sub.add_parser("axioms", help="run the quasi-valuation axiom harness")
    p_axioms.add_argument("--qv", required=True)
    p_axioms.add_argument("--samples", type=int, default=200)
    p_axioms.add_argument("--seed", type=int, default=0)
    p_axioms.set_defaults(handler=cmd_axioms)

    p_sep = sub.add_parser("separate", help="disjoint balls separating two points")
    p_sep.add_argument("--qv", required=True)
    p_sep.add_argument("x")
    p_sep.add_argument("y")
    p_sep.add_argument("--samples", type=int, default=100)
    p_sep.add_argument("--seed", type=int, default=0)
    p_sep.set_defaults(handler=cmd_separate)

    p_approx = sub.add_parser("approx", help="solve a weak-approximation problem file")
    p_approx.add_argument("--problem", required=True, help="JSON problem file")
    p_approx.set_defaults(handler=cmd_approx)

    p_lemma = sub.add_parser("lemma", help="run one property check by id")
    p_lemma.add_argument("--id", required=True, choices=sorted(LEMMA_IDS),
                         dest="lemma_id")
    p_lemma.add_argument("--instances", type=int, default=20)
    p_lemma.add_argument("--samples", type=int, default=100)
    p_lemma.add_argument("--seed", type=int, default=0)
    p_lemma.set_defaults(handler=cmd_lemma)

    return parser


def cmd_eval(args) -> int:
    qv = parse_qv(args.qv)
    element = parse_element(args.expr)
    value = qv.value(element)
    if args.format == "json":
        print(json.dumps({
            "qv": str(qv),
            "element": format_element(element),
            "value": str(value),
        }))
    else:
        print(f"w({format_element(element)}) = {value}")
    return 0


def cmd_ball(args) -> int:
    qv = parse_qv(args.qv)
    center = parse_element(args.center)
    try:
        bound = Fraction(args.bound)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad bound {args.bound!r}") from None
    ball = Ball(qv, center, bound, strict=not args.closed)
    rows = []
    for text in args.members:
        element = parse_element(text)
        rows.append({
            "element": format_element(element),
            "gauge": str(ball.gauge(element)),
            "member": ball.contains(element),
        })
    if args.format == "json":
        print(json.dumps({"ball": str(ball), "members": rows}))
    else:
        print(f"ball: {ball}")
        width = max(len(r["element"]) for r in rows)
        for r in rows:
            mark = "in " if r["member"] else "out"
            print(f"  {r['element']:<{width}}  w(y-x) = {r['gauge']:<8} {mark}")
    return 0


def _emit_report(report: PropertyReport, fmt: str) -> int:
    if fmt == "json":
        print(report.to_json(indent=2))
    else:
        print(report.summary())
        if not report.passed:
            print("counterexamples:")
            print(report.to_json(indent=2))
    return 0 if report.passed else 1


def cmd_axioms(args) -> int:
    qv = parse_qv(args.qv)
    rng = random.Random(args.seed)
    samples = elements_for(qv, rng, args.samples)
    report = check_axioms(qv, samples, seed=args.seed)
    return _emit_report(report, args.format)


def cmd_separate(args) -> int:
    qv = parse_qv(args.qv)
    x = parse_element(args.x)
    y = parse_element(args.y)
    m, ball_x, ball_y = separation_witness(qv, x, y)
    rng = random.Random(args.seed)
    report = PropertyReport(lemma="hausdorff-separation", seed=args.seed)
    for z in ball_members(ball_x, rng, args.samples):
        report.record()
        if ball_y.contains(z):
            report.fail({"z": z}, "balls are disjoint", "z lies in both")
    for z in ball_members(ball_y, rng, args.samples):
        report.record()
        if ball_x.contains(z):
            report.fail({"z": z}, "balls are disjoint", "z lies in both")
    if args.format == "table":
        print(f"witness bound m = {m}")
        print(f"  {ball_x}")
        print(f"  {ball_y}")
    return _emit_report(report, args.format)


def cmd_approx(args) -> int:
    solution = solve_problem_file(args.problem)
    print(solution.to_json(indent=2))
    return 0


def cmd_lemma(args) -> int:
    report = run_lemma(args.lemma_id, seed=args.seed,
                       instances=args.instances, samples=args.samples)
    return _emit_report(report, args.format)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = args.precision_cap
    if cap is None and os.environ.get(PRECISION_ENV):
        try:
            cap = int(os.environ[PRECISION_ENV])
        except ValueError:
            print(f"{PRECISION_ENV} must be an integer", file=sys.stderr)
            return 2
    try:
        if cap is not None:
            set_precision_cap(cap)
        return args.handler(args)
    except (ParseError, DomainError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
