"""Acceptance gate: nine exact-arithmetic criteria over the full parameter grid.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion, or directly with ``python tests/test_acceptance.py``.
"""

import io
import itertools
import random
import sys
import time
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import pytest


sys.path.insert(0, str(Path(__file__).parent))

from strategies import random_element  # noqa: E402
from promislow import serialize  # noqa: E402
from promislow.cli import main  # noqa: E402
from promislow.endo import check_prop2  # noqa: E402
from promislow.group_ring import embed, mul_crossed, mul_matrix  # noqa: E402
from promislow.laurent import LaurentPoly  # noqa: E402
from promislow.matrix4 import generators  # noqa: E402
from promislow.prime_field import FieldCtx  # noqa: E402
from promislow.prop1_checks import check_h_parity, tilde_lemma  # noqa: E402
from promislow.units import UnitParams, build_h, build_unit, verify_unit  # noqa: E402

GRID_D = (2, 3, 5, 7, 11)
GRID_T = range(-3, 4)
GRID_W = range(-3, 4)
GRID_N = (1, 2, 3)
GRID = list(itertools.product(GRID_D, GRID_T, GRID_W, GRID_N))
GOLDEN = Path(__file__).parent / "golden"
ORACLE_SAMPLES = 1000

pytestmark = pytest.mark.slow


@dataclass
class PointResult:
    both_sided_inverse: bool
    det_u: bool
    det_inverse: bool
    prop2: bool
    support: int
    tilde: bool
    round_trip: bool


def _point(key) -> PointResult:
    params = UnitParams(*key)
    u = build_unit(params)
    report = verify_unit(u)
    inverse = report.inverse
    U = embed(u)
    text = serialize.dumps(u, params)
    return PointResult(
        both_sided_inverse=report.is_unit,
        det_u=report.det == 1,
        det_inverse=inverse is not None and embed(inverse).det() == 1,
        prop2=check_prop2(params),
        support=u.support_size(),
        tilde=tilde_lemma(params, u, U),
        round_trip=serialize.loads(text) == (params, u) and serialize.dumps(u, params) == text,
    )


@lru_cache(maxsize=None)
def grid_results():
    return {key: _point(key) for key in GRID}


def report(number: int, name: str, failures: list) -> None:
    line = f"criterion {number} {name}: {'PASS' if not failures else 'FAIL'}"
    if failures:
        line += f" ({len(failures)} failing, first {failures[0]})"
    print(line, file=sys.__stdout__, flush=True)
    assert not failures, line


def _grid_failures(attr):
    return [k for k, r in grid_results().items() if not attr(r)]


def test_criterion_1_unit_identity():
    report(1, "unit identity u*u' = u'*u = 1", _grid_failures(lambda r: r.both_sided_inverse))


def test_criterion_2_determinants():
    report(2, "det U = det U' = 1", _grid_failures(lambda r: r.det_u and r.det_inverse))


def test_criterion_3_endomorphism_twist():
    report(3, "u = z^t sigma(u0)", _grid_failures(lambda r: r.prop2))


def test_criterion_4_nontrivial():
    report(4, "support > 1", _grid_failures(lambda r: r.support > 1))


def test_criterion_5_specializations():
    failures = []
    for d, t, n in itertools.product(GRID_D, GRID_T, GRID_N):
        expected = n % 2 if d == 2 else 0
        if check_h_parity(d, t, n) != expected:
            failures.append(("bar h", d, t, n))
    failures += [("tilde", *k) for k in _grid_failures(lambda r: r.tilde)]
    report(5, "bar and tilde specializations", failures)


def test_criterion_6_matrix_relations():
    failures = []
    for d in GRID_D:
        ctx = FieldCtx(d)
        g = generators(ctx)
        checks = {
            "A^2 = X": g.A @ g.A == g.X,
            "B^2 = Y": g.B @ g.B == g.Y,
            "AB = C": g.A @ g.B == g.C,
            "C^2 = Z": g.C @ g.C == g.Z,
            "XB = BX^-1": g.X @ g.B == g.B @ g.X ** -1,
            "YA = AY^-1": g.Y @ g.A == g.A @ g.Y ** -1,
            "ZA = AZ^-1": g.Z @ g.A == g.A @ g.Z ** -1,
            "ZB = BZ^-1": g.Z @ g.B == g.B @ g.Z ** -1,
            "det A = 1": g.A.det() == 1,
            "det B = 1": g.B.det() == 1,
        }
        failures += [(d, name) for name, ok in checks.items() if not ok]
    report(6, "generator matrix relations", failures)


def test_criterion_7_multiplication_oracle():
    failures = []
    for d in (2, 3, 5):
        ctx = FieldCtx(d)
        rng = random.Random(7919 * d)
        for i in range(ORACLE_SAMPLES):
            u = random_element(rng, ctx, max_terms=5, lo=-3, hi=3)
            v = random_element(rng, ctx, max_terms=5, lo=-3, hi=3)
            if mul_matrix(u, v) != mul_crossed(u, v):
                failures.append((d, i))
    report(7, f"matrix vs crossed product on {ORACLE_SAMPLES} pairs per d", failures)


def test_criterion_8_h_closed_form():
    failures = []
    for d, t, n in itertools.product(GRID_D, GRID_T, GRID_N):
        ctx = FieldCtx(d)
        e = 1 - 2 * t
        one = LaurentPoly.one(ctx)
        zeta = LaurentPoly.monomial(1, (0, 0, e), ctx)
        lhs = build_h(UnitParams(d, t, 0, n)) * (one - zeta) ** 2
        if lhs != one - LaurentPoly.monomial(1, (0, 0, e * n * d), ctx):
            failures.append((d, t, n))
    report(8, "h (1 - zeta)^2 = 1 - zeta^(nd)", failures)


def test_criterion_9_serialization():
    failures = []
    for key in [(2, 0, 0, 1), (3, 1, 1, 2)]:
        d, t, w, n = key
        out = io.StringIO()
        main(["unit", "--d", str(d), "--t", str(t), "--w", str(w), "--n", str(n)], out=out)
        if out.getvalue() != (GOLDEN / f"unit_d{d}_t{t}_w{w}_n{n}.json").read_text():
            failures.append(("golden", *key))
    failures += [("round trip", *k) for k in _grid_failures(lambda r: r.round_trip)]
    report(9, "golden bytes and round trip", failures)


if __name__ == "__main__":
    start = time.perf_counter()
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failed += 1
    print(f"{len(tests) - failed}/{len(tests)} criteria passed in {time.perf_counter() - start:.1f}s")
    sys.exit(1 if failed else 0)
