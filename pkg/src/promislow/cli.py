"""Command line interface.

    promislow unit   --d 2 --t 0 --w 0 --n 1 [--format json|text]
    promislow invert --d 2 --t 0 --w 0 --n 1 [--format json|text]
    promislow verify --d 7 --t -2 --w 3 --n 2
    promislow sweep  --d-list 2,3,5 --t-range=-2:2 --w-range=-2:2 --n-range 1:3 [--jobs 4]

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
Ranges are inclusive ``lo:hi``; write ``--t-range=-2:2`` when ``lo`` is negative.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import serialize
from .endo import check_prop2
from .errors import AlgebraError, NotPrime
from .prime_field import is_prime
from .prop1_checks import check_prop1
from .units import UnitParams, build_unit, invert_unit, verify_unit

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class PointReport:
    params: tuple
    is_unit: bool
    is_nontrivial: bool
    det: str
    det_inverse: str
    support: int
    prop1: bool
    prop2: bool

    @property
    def verdicts(self) -> dict:
        return {
            "is_unit": self.is_unit,
            "is_nontrivial": self.is_nontrivial,
            "det": self.det == "1",
            "prop1": self.prop1,
            "prop2": self.prop2,
        }

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())


def verify_point(params: UnitParams) -> PointReport:
    u = build_unit(params)
    report = verify_unit(u)
    prop1 = False
    det_inverse = "-"
    if report.is_unit:
        p1 = check_prop1(params, inverse=report.inverse)
        prop1 = p1.passed
        det_inverse = str(p1.det_u_inv)
    return PointReport(
        params=params.as_tuple(),
        is_unit=report.is_unit,
        is_nontrivial=report.is_nontrivial,
        det=str(report.det),
        det_inverse=det_inverse,
        support=report.support,
        prop1=prop1,
        prop2=check_prop2(params),
    )


def _verify_tuple(args) -> PointReport:
    return verify_point(UnitParams(*args))


def _mark(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def _int_range(text: str):
    lo, sep, hi = text.partition(":")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _int_list(text: str):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _add_point_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, required=True, help="prime characteristic")
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--n", type=int, default=1, help="length of the geometric factor in h (n >= 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="promislow",
        description="Build and verify nontrivial units in GF(d)[G] for the Promislow group G.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("unit", "print the unit u(d,t,w,n)"), ("invert", "print the inverse of u(d,t,w,n)")):
        p = sub.add_parser(name, help=text)
        _add_point_args(p)
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", help="check one parameter point")
    _add_point_args(p)

    p = sub.add_parser("sweep", help="check a grid of parameter points")
    p.add_argument("--d-list", type=_int_list, required=True, help="e.g. 2,3,5")
    p.add_argument("--t-range", type=_int_range, required=True, help="inclusive lo:hi")
    p.add_argument("--w-range", type=_int_range, required=True, help="inclusive lo:hi")
    p.add_argument("--n-range", type=_int_range, default=[1], help="inclusive lo:hi, default 1")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _params(parser, args) -> UnitParams:
    try:
        return UnitParams(args.d, args.t, args.w, args.n)
    except NotPrime:
        parser.error(f"d must be prime, got {args.d}")
    except ValueError as e:
        parser.error(str(e))


def _emit(u, params, fmt, out) -> None:
    if fmt == "json":
        out.write(serialize.dumps(u, params))
    else:
        out.write(serialize.to_text(u))


def cmd_unit(parser, args, out) -> int:
    params = _params(parser, args)
    _emit(build_unit(params), params, args.format, out)
    return EXIT_OK


def cmd_invert(parser, args, out) -> int:
    params = _params(parser, args)
    try:
        inverse = invert_unit(build_unit(params))
    except AlgebraError as e:
        print(f"inversion failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    _emit(inverse, params, args.format, out)
    return EXIT_OK


def format_report(r: PointReport) -> str:
    d, t, w, n = r.params
    lines = [
        f"params: d={d} t={t} w={w} n={n}",
        f"is_unit: {_mark(r.is_unit)}",
        f"is_nontrivial: {_mark(r.is_nontrivial)}",
        f"det: {r.det} ({_mark(r.det == '1')})",
        f"det_inverse: {r.det_inverse}",
        f"support: {r.support}",
        f"prop1: {_mark(r.prop1)}",
        f"prop2: {_mark(r.prop2)}",
        f"result: {_mark(r.passed)}",
    ]
    return "\n".join(lines) + "\n"


def cmd_verify(parser, args, out) -> int:
    report = verify_point(_params(parser, args))
    out.write(format_report(report))
    return EXIT_OK if report.passed else EXIT_FAIL


SWEEP_COLUMNS = ("d", "t", "w", "n", "support", "is_unit", "is_nontrivial", "det", "prop1", "prop2")


def format_row(r: PointReport) -> str:
    v = r.verdicts
    cells = [*map(str, r.params), str(r.support)] + [_mark(v[k]) for k in SWEEP_COLUMNS[5:]]
    return "\t".join(cells)


def cmd_sweep(parser, args, out) -> int:
    bad = [d for d in args.d_list if not is_prime(d)]
    if bad:
        parser.error(f"d must be prime, got {bad[0]}")
    if args.n_range[0] < 1:
        parser.error("n must be >= 1")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    points = sorted(itertools.product(args.d_list, args.t_range, args.w_range, args.n_range))
    if args.jobs == 1:
        reports = [_verify_tuple(p) for p in points]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_tuple, points, chunksize=4))
    out.write("\t".join(SWEEP_COLUMNS) + "\n")
    for r in reports:
        out.write(format_row(r) + "\n")
    failed = sum(not r.passed for r in reports)
    out.write(f"# {len(reports)} points, {len(reports) - failed} passed, {failed} failed\n")
    return EXIT_OK if failed == 0 else EXIT_FAIL


COMMANDS = {"unit": cmd_unit, "invert": cmd_invert, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](parser, args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
