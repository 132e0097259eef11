"""Command-line front end: ``degenfact {table,value,poly,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import DegenfactError, UsageError, parse_rational
from .degenerate import SYMBOLIC_X, LambdaMode, parse_x
from .triangle import CLASSICAL_FAMILIES, FAMILIES, build_triangle, canonical_family, encode_value, family_value, to_csv, to_json
from .verify import CHECK_IDS, DEFAULT_MODES, run_all


def _default_jobs() -> int:
    raw = os.environ.get("DEGENFACT_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _lambda(text: str) -> LambdaMode:
    try:
        return LambdaMode.parse(text)
    except DegenfactError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _x(text: str):
    try:
        return parse_x(text)
    except DegenfactError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DegenfactError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(text: str) -> str:
    try:
        return canonical_family(text)
    except DegenfactError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degenfact", description="Exact degenerate central factorial numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_x=True):
        sp.add_argument("--family", type=_family, required=True, help=f"one of {', '.join(FAMILIES)} (aliases: T, t, S2L, T2, t1, Euler)")
        sp.add_argument("--lambda", dest="lam", type=_lambda, default=LambdaMode.symbolic(), help='"symbolic" or a rational p/q')
        sp.add_argument("--r", type=_rat, default=Fraction(1), help="order of the Euler polynomials (rational)")
        if with_x:
            sp.add_argument("--x", type=_x, default=None, help='"symbolic" or a rational p/q')
        sp.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")

    t = sub.add_parser("table", help="materialize a number triangle")
    common(t)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--k-max", type=int, default=None)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--jobs", type=int, default=_default_jobs(), help="row-parallel workers (default $DEGENFACT_JOBS or 1)")

    v = sub.add_parser("value", help="a single number")
    common(v)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, default=0)
    v.add_argument("--format", choices=("json", "text"), default="json")

    q = sub.add_parser("poly", help="a polynomial in x (T2 and Euler families)")
    common(q, with_x=False)
    q.add_argument("--x", type=_x, default=SYMBOLIC_X, help='"symbolic" (default) or a rational p/q')
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, default=0)
    q.add_argument("--format", choices=("json", "text"), default="json")

    c = sub.add_parser("verify", help="run the identity checks")
    c.add_argument("--n-max", type=int, default=12)
    c.add_argument("--k-max", type=int, default=None)
    c.add_argument("--lambda", dest="lams", type=_lambda, action="append", default=None,
                   help="lambda mode; repeat for several (default: symbolic, 1/3, 0)")
    c.add_argument("--x", type=_x, default=SYMBOLIC_X)
    c.add_argument("--check", dest="checks", action="append", choices=CHECK_IDS, default=None)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--timing", action="store_true", help="include wall-clock timings (not byte-stable)")
    c.add_argument("--output", "-o", default=None)
    return p


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_single(v, args) -> str:
    if args.format == "text":
        return f"{v}\n"
    if args.family in CLASSICAL_FAMILIES:
        symbolic = False
    else:
        symbolic = args.lam.is_symbolic or args.x == SYMBOLIC_X
    return json.dumps(encode_value(v, symbolic), ensure_ascii=False) + "\n"


def _run(args, parser: argparse.ArgumentParser) -> int:
    if args.command == "verify":
        if args.n_max < 0 or (args.k_max is not None and args.k_max < 0):
            parser.error("--n-max/--k-max must be nonnegative")
        report = run_all(args.n_max, args.k_max, tuple(args.lams or DEFAULT_MODES), args.x, tuple(args.checks or CHECK_IDS))
        text = report.to_json(args.timing) if args.format == "json" else report.to_text(args.timing)
        _emit(text, args.output)
        return 0 if report.passed else 1

    if args.command == "table":
        if args.n_max < 0 or (args.k_max is not None and args.k_max < 0):
            parser.error("--n-max/--k-max must be nonnegative")
        if args.x is not None and args.family not in ("T2_lambda", "Euler_r"):
            parser.error("--x applies only to the T2_lambda and Euler_r families")
        tri = build_triangle(args.family, args.n_max, args.k_max, args.lam, args.r, args.x, jobs=max(1, args.jobs))
        _emit(to_csv(tri) if args.format == "csv" else to_json(tri), args.output)
        return 0

    if args.n < 0 or args.k < 0:
        parser.error("--n/--k must be nonnegative")
    if args.command == "poly" and args.family not in ("T2_lambda", "Euler_r"):
        parser.error("poly applies only to the T2_lambda and Euler_r families")
    if args.command == "value" and args.x is not None and args.family not in ("T2_lambda", "Euler_r"):
        parser.error("--x applies only to the T2_lambda and Euler_r families")
    v = family_value(args.family, args.n, args.k, args.lam, args.r, args.x)
    _emit(_render_single(v, args), args.output)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"degenfact: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
