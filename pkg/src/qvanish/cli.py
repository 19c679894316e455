"""Command-line front end.

    qvanish expand "(q;q)" --order 8
    qvanish dissect "(-q,-q^4;q^5)(q,q^9;q^10)^3" 5 2
    qvanish diff "(-q,-q^4;q^5)^3(q^3,q^7;q^10)" "(-q^2,-q^3;q^5)^3(q,q^9;q^10)"
    qvanish verify --suite all

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time

from .dsl import ParseError, parse
from .errors import QSeriesError
from .qproducts import expand
from .series import Series
from .verify import SUITES, report_table, run_cases, suite_cases, summarize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_ORDER = 500


def _default_order() -> int:
    raw = os.environ.get("QS_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_ORDER


def _order(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("order must be at least 2")
    return n


def render_series(s: Series, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"base": s.base, "order": s.order, "coeffs": list(s.coeffs)})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "coefficient"])
        for i, c in enumerate(s.coeffs):
            w.writerow([s.base + i, c])
        return buf.getvalue().rstrip("\n")
    if s.base == 0:
        return " ".join(str(c) for c in s.coeffs)
    # Laurent output: one exponent-annotated line per coefficient
    return "\n".join(f"{s.base + i}: {c}" for i, c in enumerate(s.coeffs))


def _expand_arg(src: str, order: int) -> Series:
    return expand(parse(src), order)


def cmd_expand(args) -> int:
    print(render_series(_expand_arg(args.expr, args.order), args.format))
    return EXIT_OK


def cmd_dissect(args) -> int:
    s = _expand_arg(args.expr, args.order).dissect(args.m, args.r)
    print(render_series(s, args.format))
    return EXIT_OK


def cmd_diff(args) -> int:
    d = _expand_arg(args.expr_a, args.order) - _expand_arg(args.expr_b, args.order)
    first = next(d.items(), None)
    if args.format == "json":
        out = json.loads(render_series(d, "json"))
        out["first_nonzero"] = list(first) if first else None
        print(json.dumps(out))
        return EXIT_OK
    print(render_series(d, args.format))
    if args.format == "text":
        if first is None:
            print(f"zero through q^{d.order - 1}")
        else:
            print(f"first nonzero at index {first[0]}: {first[1]}")
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    reports = run_cases(suite_cases(args.suite), args.order, parallel=args.parallel)
    if args.format == "json":
        for r in reports:
            print(r.to_json())
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["case_id", "status", "N", "checked_count", "first_failure", "claim"])
        for r in reports:
            ff = "" if r.first_failure is None else " ".join(map(str, r.first_failure))
            w.writerow([r.case_id, r.status, r.order, r.checked_count, ff, r.claim])
        print(buf.getvalue().rstrip("\n"))
    else:
        print(report_table(reports))
        print(summarize(reports))
    logging.getLogger(__name__).info("verify %s took %.2fs", args.suite, time.perf_counter() - start)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=_order, default=_default_order(), help="truncation order N (env QS_ORDER)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(prog="qvanish", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print the coefficients of a product")
    p.add_argument("expr")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("dissect", parents=[common], help="coefficients at m*n + r")
    p.add_argument("expr")
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("diff", parents=[common], help="coefficients of A - B")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "dissect" and not (args.m >= 1 and 0 <= args.r < args.m):
        parser.error(f"need m >= 1 and 0 <= r < m, got m={args.m}, r={args.r}")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}\n{exc.caret()}", file=sys.stderr)
        return EXIT_USAGE
    except QSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
