"""Command line front end: counting, verification suites, tables, asymptotics.

Counts are printed as decimal strings inside JSON records so arbitrarily
large values survive tools that parse numbers as doubles.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 resource/budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import asympt as asympt_mod
from . import oracle as census_mod
from . import formulas, hexmatrices, pfaffian, verify
from .errors import BudgetError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_CLASS_METHODS = {
    "all": ("formula", "enumerate"),
    "vsym": ("formula", "enumerate"),
    "hsym": ("enumerate",),
    "centered": ("formula", "enumerate"),
    "centered-vsym": ("formula", "pfaffian", "enumerate"),
}


def _shape_guard(a: int, b: int, c: int, cls: str) -> None:
    if cls in ("vsym", "hsym", "centered", "centered-vsym") and a != c:
        raise ValueError(f"class {cls} needs a symmetric hexagon, got a={a}, c={c}")
    if cls in ("centered", "centered-vsym") and a % 2 == b % 2:
        raise ValueError(
            f"class {cls} needs a central rhombus: a={a} and b={b} must differ in parity"
        )


def _count_formula(a: int, b: int, c: int, cls: str) -> int:
    if cls == "all":
        return formulas.count_T(a, b, c)
    if cls == "vsym":
        return formulas.count_ST(a, b)
    if cls == "centered":
        return formulas.centered_count(a, b)
    if cls == "centered-vsym":
        return formulas.centered_sym_count(a, b)
    raise ValueError(f"no closed-form count for class {cls}")


def _count_pfaffian(a: int, b: int, cls: str) -> int:
    if cls != "centered-vsym":
        raise ValueError("the pfaffian method only counts class centered-vsym")
    if a % 2 == 1:
        value = pfaffian.pf(hexmatrices.build_M((a - 1) // 2, b // 2))
    else:
        value = pfaffian.pf(hexmatrices.build_N(a // 2, (b - 1) // 2))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"pfaffian count came out as {value}")
    return value.numerator


def _count_enumerate(a: int, b: int, c: int, cls: str, limit: int, force: bool) -> int:
    counts = census_mod.census(a, b, c, limit=limit, force=force)
    value = {
        "all": counts.total,
        "vsym": counts.vsym,
        "hsym": counts.hsym,
        "centered": counts.centered,
        "centered-vsym": counts.centered_vsym,
    }[cls]
    if value is None:
        raise ValueError(f"hexagon ({a},{b},{c}) has no {cls} census")
    return value


def _resolve_count(args) -> tuple[int, str]:
    a, b, c, cls = args.a, args.b, args.c, args.cls
    _shape_guard(a, b, c, cls)
    methods = (args.method,) if args.method != "auto" else _CLASS_METHODS[cls]
    last_error: Exception | None = None
    for method in methods:
        if method not in _CLASS_METHODS[cls]:
            raise ValueError(f"method {method} does not apply to class {cls}")
        try:
            if method == "formula":
                return _count_formula(a, b, c, cls), method
            if method == "pfaffian":
                return _count_pfaffian(a, b, cls), method
            return _count_enumerate(a, b, c, cls, args.limit, args.force), method
        except ValueError as exc:
            if args.method != "auto":
                raise
            last_error = exc
    raise last_error if last_error else ValueError("no applicable method")


def _cmd_count(args) -> int:
    value, method = _resolve_count(args)
    record = {
        "a": args.a,
        "b": args.b,
        "c": args.c,
        "class": args.cls,
        "method": method,
        "count": str(value),
    }
    print(json.dumps(record))
    return EXIT_OK


def _cmd_verify(args) -> int:
    outcomes = verify.run_suite(args.suite, args.max_n, args.max_x, seed=args.seed)
    print(json.dumps([o.to_json() for o in outcomes], indent=2))
    failed = False
    for outcome in outcomes:
        status = "ok" if outcome.ok else f"{len(outcome.failures)} FAILURES"
        print(
            f"suite {outcome.suite}: {outcome.cases} cases, {status}, "
            f"{outcome.wall_time:.2f}s",
            file=sys.stderr,
        )
        for note in outcome.notes:
            print(f"  note: {note}", file=sys.stderr)
        for failure in outcome.failures[:20]:
            print(f"  FAIL {failure.case}: {failure.detail}", file=sys.stderr)
        failed = failed or not outcome.ok
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _table_rows(theorem: int, max_n: int, max_x: int) -> list[dict]:
    rows = []

    def odd_rows(count_fn, prob_fn):
        for n in range(0, max_n + 1):
            for x in range(1, max_x + 1):
                a, b = 2 * n + 1, 2 * x
                rows.append(
                    {"n": n, "x": x, "a": a, "b": b,
                     "count": count_fn(a, b), "probability": prob_fn(a, b)}
                )

    def even_rows(count_fn, prob_fn):
        for n in range(1, max_n + 1):
            for x in range(0, max_x + 1):
                a, b = 2 * n, 2 * x + 1
                rows.append(
                    {"n": n, "x": x, "a": a, "b": b,
                     "count": count_fn(a, b), "probability": prob_fn(a, b)}
                )

    if theorem == 1:
        odd_rows(formulas.centered_count, formulas.prob_centered)
        even_rows(formulas.centered_count, formulas.prob_centered)
    elif theorem == 2:
        odd_rows(formulas.centered_sym_count, formulas.prob_centered_sym)
    elif theorem == 3:
        even_rows(formulas.centered_sym_count, formulas.prob_centered_sym)
    else:
        raise ValueError(f"theorem must be 1, 2 or 3, got {theorem}")
    return rows


def _cmd_table(args) -> int:
    rows = _table_rows(args.theorem, args.max_n, args.max_x)
    if args.format == "csv":
        print("n,x,a,b,count,probability")
        for row in rows:
            print(
                f"{row['n']},{row['x']},{row['a']},{row['b']},"
                f"{row['count']},{row['probability']}"
            )
    else:
        payload = [
            {"n": r["n"], "x": r["x"], "a": r["a"], "b": r["b"],
             "count": str(r["count"]), "probability": str(r["probability"])}
            for r in rows
        ]
        print(json.dumps(payload, indent=2))
    if args.plot:
        from . import plotting

        plotting.plot_table(rows, args.theorem, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def _cmd_asympt(args) -> int:
    n_values = [int(part) for part in args.n.split(",") if part.strip()]
    report = asympt_mod.asympt_report(args.ratio, n_values)
    print(json.dumps(report.to_json(), indent=2))
    if args.plot:
        from . import plotting

        plotting.plot_asympt_report(report, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexcensus",
        description="Exact counting and verification of centered and symmetric "
        "rhombus tilings of hexagons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count tilings of one hexagon")
    count.add_argument("--a", type=int, required=True)
    count.add_argument("--b", type=int, required=True)
    count.add_argument("--c", type=int, required=True)
    count.add_argument("--class", dest="cls", choices=sorted(_CLASS_METHODS),
                       default="all")
    count.add_argument("--method", choices=("formula", "pfaffian", "enumerate", "auto"),
                       default="auto")
    count.add_argument("--limit", type=int, default=census_mod.DEFAULT_LIMIT,
                       help="largest total the enumerator will attempt")
    count.add_argument("--force", action="store_true",
                       help="enumerate even past the budget limit")
    count.set_defaults(handler=_cmd_count)

    ver = sub.add_parser("verify", help="run an invariant suite")
    ver.add_argument("--suite", choices=verify.SUITE_NAMES, default="all")
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--max-x", type=int, default=None)
    ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ver.set_defaults(handler=_cmd_verify)

    table = sub.add_parser("table", help="tabulate exact counts and probabilities")
    table.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    table.add_argument("--max-n", type=int, default=3)
    table.add_argument("--max-x", type=int, default=4)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--plot", metavar="PATH", default=None,
                       help="also render the probabilities to an image file")
    table.set_defaults(handler=_cmd_table)

    asym = sub.add_parser("asympt", help="compare R(n, round(a*n)) with the arcsine limit")
    asym.add_argument("--ratio", type=float, required=True)
    asym.add_argument("--n", default="20,40,80",
                      help="comma-separated n values (default 20,40,80)")
    asym.add_argument("--plot", metavar="PATH", default=None,
                      help="also render the report to an image file")
    asym.set_defaults(handler=_cmd_asympt)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
