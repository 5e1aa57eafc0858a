"""Command-line front end.

Verbs: eval (apply a function to a point), op (binary/unary operations,
writing a PWF file), check (one axiom), classify (full suite), demo
(scripted experiment cases), sample (plot-ready tab-separated values).

Exit codes: 0 success, 1 failed check/classify/demo, 2 usage error,
3 file or parse error.  Output is deterministic for identical argv,
input files, and seeds.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .axiom_lab import (
    AXIOM_IDS,
    CASE_IDS,
    GenConfig,
    check_axiom,
    classify,
    render_axiom_report,
    render_classification,
    render_repro_report,
    reproduce,
)
from .constructions import diamond, star
from .convolution import ConvSpec, convolve
from .pwfn import (
    ONE,
    ZERO,
    PwfDomainError,
    PwfSyntaxError,
    parse_pwf,
    parse_rational,
    serialize_pwf,
)
from .scalar_ops import BUILTIN_NAMES, builtin
from .truth_lattice import join, meet, negate

_ENGINE_FLAG = {"exact": "exact_min", "indicator": "indicator", "grid": "grid"}


def _read_fn(path: str):
    with open(path, "rb") as handle:
        data = handle.read()
    return parse_pwf(data)


def _parse_point(token: str) -> Fraction:
    x = parse_rational(token)
    if not ZERO <= x <= ONE:
        raise ValueError(f"point {token!r} outside [0, 1]")
    return x


def _cmd_eval(args) -> int:
    fn = _read_fn(args.fn)
    x = _parse_point(args.at)
    sys.stdout.write(f"{fn(x)}\n")
    return 0


def _cmd_op(args) -> int:
    if args.what != "conv":
        for flag, value in (
            ("--tnorm", args.tnorm),
            ("--conorm", args.conorm),
            ("--engine", args.engine),
            ("--grid", args.grid),
        ):
            if value is not None:
                raise ValueError(f"{flag} only applies to --what conv")
    if args.what == "neg":
        if args.rhs is not None:
            raise ValueError("'neg' is unary; drop --rhs")
    elif args.rhs is None:
        raise ValueError(f"'{args.what}' needs --rhs")
    lhs = _read_fn(args.lhs)
    if args.what == "neg":
        result = negate(lhs)
    else:
        rhs = _read_fn(args.rhs)
        if args.what == "meet":
            result = meet(lhs, rhs)
        elif args.what == "join":
            result = join(lhs, rhs)
        elif args.what == "star":
            result = star(lhs, rhs).result
        elif args.what == "diamond":
            result = diamond(lhs, rhs)
        else:
            result = _run_conv(args, lhs, rhs)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(serialize_pwf(result))
    return 0


def _run_conv(args, lhs, rhs):
    if (args.tnorm is None) == (args.conorm is None):
        raise ValueError("conv needs exactly one of --tnorm / --conorm")
    if args.engine is None:
        raise ValueError("conv needs --engine {exact,indicator,grid}")
    direction = "norm" if args.tnorm is not None else "conorm"
    combiner = builtin(args.tnorm if args.tnorm is not None else args.conorm)
    star_op = builtin(args.star)
    engine = _ENGINE_FLAG[args.engine]
    if engine == "grid" and args.grid is None:
        raise ValueError("the grid engine needs --grid N")
    if engine != "grid" and args.grid is not None:
        raise ValueError("--grid only applies to --engine grid")
    spec = ConvSpec(direction, combiner, star_op, engine, args.grid)
    return convolve(lhs, rhs, spec)


def _cmd_check(args) -> int:
    cfg = GenConfig(seed=args.seed)
    report = check_axiom(args.op, args.axiom, args.trials, cfg)
    sys.stdout.write(render_axiom_report(args.op, report))
    return 0 if report.passed else 1


def _cmd_classify(args) -> int:
    cfg = GenConfig(seed=args.seed)
    result = classify(args.op, args.trials, cfg)
    sys.stdout.write(render_classification(result))
    return 0 if all(r.passed for r in result.reports) else 1


def _cmd_demo(args) -> int:
    report = reproduce(args.case_id)
    sys.stdout.write(render_repro_report(report))
    return 0 if report.passed else 1


def _cmd_sample(args) -> int:
    fn = _read_fn(args.fn)
    if args.n < 1:
        raise ValueError(f"--n must be positive, got {args.n}")
    xs = sorted(set(Fraction(k, args.n) for k in range(args.n + 1)) | set(fn.breakpoints))
    for x in xs:
        sys.stdout.write(f"{float(x)!r}\t{float(fn(x))!r}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="t2alg",
        description=(
            "Exact operations and axiom checks for piecewise-affine "
            "membership functions on [0, 1]."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser("eval", help="print f(x) as an exact rational")
    p_eval.add_argument("--fn", required=True, help="PWF v1 file")
    p_eval.add_argument("--at", required=True, help="rational point p/q in [0, 1]")
    p_eval.set_defaults(handler=_cmd_eval)

    p_op = sub.add_parser("op", help="apply an operation, write a PWF file")
    p_op.add_argument(
        "--what",
        required=True,
        choices=("meet", "join", "neg", "star", "diamond", "conv"),
    )
    p_op.add_argument("--lhs", required=True, help="left operand PWF file")
    p_op.add_argument("--rhs", help="right operand PWF file (binary ops)")
    p_op.add_argument("--out", required=True, help="output PWF file")
    p_op.add_argument("--tnorm", choices=BUILTIN_NAMES, help="conv combiner (norm)")
    p_op.add_argument("--conorm", choices=BUILTIN_NAMES, help="conv combiner (conorm)")
    p_op.add_argument(
        "--star", default="min", choices=BUILTIN_NAMES, help="conv inner operation"
    )
    p_op.add_argument("--engine", choices=tuple(_ENGINE_FLAG), help="conv engine")
    p_op.add_argument("--grid", type=int, help="grid denominator for --engine grid")
    p_op.set_defaults(handler=_cmd_op)

    p_check = sub.add_parser("check", help="probe one axiom on one operation")
    p_check.add_argument("--op", required=True, help="meet|join|star|diamond|and:..|or:..")
    p_check.add_argument("--axiom", required=True, choices=AXIOM_IDS)
    p_check.add_argument("--trials", type=int, default=100)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.set_defaults(handler=_cmd_check)

    p_classify = sub.add_parser("classify", help="run the full axiom suite")
    p_classify.add_argument("--op", required=True)
    p_classify.add_argument("--trials", type=int, default=100)
    p_classify.add_argument("--seed", type=int, default=0)
    p_classify.set_defaults(handler=_cmd_classify)

    p_demo = sub.add_parser("demo", help="run a scripted experiment case")
    p_demo.add_argument("case_id", choices=CASE_IDS)
    p_demo.set_defaults(handler=_cmd_demo)

    p_sample = sub.add_parser("sample", help="tab-separated samples for plotting")
    p_sample.add_argument("--fn", required=True, help="PWF v1 file")
    p_sample.add_argument("--n", type=int, required=True, help="sample at x = k/n")
    p_sample.set_defaults(handler=_cmd_sample)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return 0
        return int(exc.code) if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (PwfSyntaxError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (PwfDomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
