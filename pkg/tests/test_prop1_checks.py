import itertools

import pytest

from promislow.group_ring import embed
from promislow.laurent import LaurentPoly, gens
from promislow.matrix4 import Mat4, generators
from promislow.prime_field import FieldCtx
from promislow.prop1_checks import (
    check_h_parity,
    check_prop1,
    mat_bar,
    mat_tilde,
    spec_bar,
    spec_tilde,
)
from promislow.units import UnitParams, build_h, build_unit


def test_bar_examples():
    ctx = FieldCtx(3)
    _, _, z = gens(ctx)
    assert spec_bar(z ** 5) == 1
    for t in (-2, 0, 3):
        assert spec_bar(build_h(UnitParams(3, t))).is_zero()
        assert spec_bar(build_h(UnitParams(2, t))) == 1


def test_tilde_examples(ctx):
    x, _, _ = gens(ctx)
    assert spec_tilde(x + x ** -1) == ctx.d - 2
    for t, w in [(0, 0), (2, -1), (-3, 3)]:
        u = build_unit(UnitParams(ctx.d, t, w, 2))
        assert all(spec_tilde(c).is_zero() for c in (u.p, u.q, u.r))
        assert spec_tilde(u.s) == LaurentPoly.monomial(1, (0, 0, 2 * t - 1), ctx)


def test_tilde_sends_x_and_y_to_minus_identity(ctx):
    g = generators(ctx)
    minus_I = -Mat4.identity(ctx)
    for m in (g.X, g.X ** -1, g.Y, g.Y ** -1):
        assert mat_tilde(m) == minus_I
    assert mat_bar(g.Z) == Mat4.identity(ctx)


@pytest.mark.parametrize("params", [(2, 0, 0, 1), (5, 2, -1, 1), (2, 1, 1, 2), (3, -2, 0, 3)])
def test_determinant_report_examples(params):
    report = check_prop1(UnitParams(*params))
    assert report.det_u == 1 and report.det_u_inv == 1
    assert report.bar_lemma and report.tilde_lemma
    assert report.passed


def test_even_n_in_char2_kills_h():
    assert check_h_parity(2, 1, 2) == 0
    u = build_unit(UnitParams(2, 1, 1, 2))
    assert all(spec_bar(c).is_zero() for c in (u.p, u.q, u.r))
    assert spec_bar(u.s) == 1


@pytest.mark.parametrize("d, t, n, expected", [(3, 0, 1, 0), (2, 0, 2, 0), (2, 5, 3, 1), (5, -1, 2, 0), (2, -2, 1, 1)])
def test_h_parity(d, t, n, expected):
    assert check_h_parity(d, t, n) == expected


@pytest.mark.parametrize("d, n", [(3, 1), (5, 2), (2, 2), (7, 3)])
def test_bar_kills_p_q_r(d, n):
    for t, w in itertools.product([-1, 0, 2], [-2, 1]):
        u = build_unit(UnitParams(d, t, w, n))
        assert all(spec_bar(c).is_zero() for c in (u.p, u.q, u.r))
        assert spec_bar(u.s) == 1


@pytest.mark.parametrize("n", [1, 3])
def test_bar_independent_of_t_w_for_char2_odd_n(n):
    images = {mat_bar(embed(build_unit(UnitParams(2, t, w, n)))) for t in (-2, 0, 1, 3) for w in (-1, 0, 2)}
    assert len(images) == 1
    assert images.pop().det() == 1


def test_bar_lemma_detects_a_wrong_matrix():
    # an element whose bar image is not A*B must fail the lemma
    from promislow.prop1_checks import bar_lemma, tilde_lemma
    from promislow.group_ring import GroupRingElem

    params = UnitParams(3, 0, 0, 1)
    ctx = params.ctx
    fake = GroupRingElem.group_element(ctx, "a")
    assert not bar_lemma(params, fake, embed(fake))
    assert not tilde_lemma(params, fake, embed(fake))
