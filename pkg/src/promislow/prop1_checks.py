"""det U = det U' = 1, checked directly and by replaying the two specializations.

det U is a unit of the Laurent ring, hence f x^i y^j z^k.  Sending z -> 1
(``bar``) pins f = 1 and i = j = 0; sending x, y -> -1 (``tilde``) then pins k = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NonConstant
from .group_ring import GroupRingElem, embed
from .laurent import LaurentPoly, MonomialImage
from .matrix4 import Mat4, generators
from .prime_field import FieldCtx, FieldElement
from .units import UnitParams, build_h, build_unit, invert_unit


def bar_images(ctx: FieldCtx):
    return (
        MonomialImage.of(1, (1, 0, 0), ctx),
        MonomialImage.of(1, (0, 1, 0), ctx),
        MonomialImage.of(1, (0, 0, 0), ctx),
    )


def tilde_images(ctx: FieldCtx):
    return (
        MonomialImage.of(-1, (0, 0, 0), ctx),
        MonomialImage.of(-1, (0, 0, 0), ctx),
        MonomialImage.of(1, (0, 0, 1), ctx),
    )


def spec_bar(p: LaurentPoly) -> LaurentPoly:
    """x -> x, y -> y, z -> 1."""
    return p.substitute(*bar_images(p.ctx))


def spec_tilde(p: LaurentPoly) -> LaurentPoly:
    """x -> -1, y -> -1, z -> z."""
    return p.substitute(*tilde_images(p.ctx))


def mat_bar(m: Mat4) -> Mat4:
    return m.substitute(*bar_images(m.ctx))


def mat_tilde(m: Mat4) -> Mat4:
    return m.substitute(*tilde_images(m.ctx))


def check_h_parity(d: int, t: int, n: int) -> FieldElement:
    """bar(h) as a field element: 0 for d > 2, n mod 2 for d = 2."""
    value = spec_bar(build_h(UnitParams(d, t, 0, n))).constant_value()
    if value is None:
        raise NonConstant("bar(h) is not a constant")
    return value


@dataclass
class Prop1Report:
    det_u: LaurentPoly
    det_u_inv: LaurentPoly
    bar_lemma: bool
    tilde_lemma: bool

    @property
    def passed(self) -> bool:
        return self.det_u == 1 and self.det_u_inv == 1 and self.bar_lemma and self.tilde_lemma


def bar_lemma(params: UnitParams, u: GroupRingElem, U: Mat4) -> bool:
    """bar(U) has determinant 1.

    When bar(h) = 0 the p, q, r parts die and bar(U) = bar(A) bar(B).  When
    bar(h) = 1 (d = 2, n odd) bar(U) must not depend on t or w.
    """
    ctx = params.ctx
    g = generators(ctx)
    u_bar = mat_bar(U)
    if u_bar.det() != 1:
        return False
    h_bar = check_h_parity(params.d, params.t, params.n)
    if h_bar == 0:
        p, q, r, s = (spec_bar(c) for c in u.components)
        return (
            p.is_zero() and q.is_zero() and r.is_zero() and s == 1
            and u_bar == mat_bar(g.A) @ mat_bar(g.B)
        )
    reference = mat_bar(embed(build_unit(UnitParams(params.d, 0, 0, params.n))))
    return u_bar == reference


def tilde_lemma(params: UnitParams, u: GroupRingElem, U: Mat4) -> bool:
    """p, q, r vanish, s -> z^(2t-1), and tilde(U) = tilde(Z)^(2t-1) tilde(C) with det 1."""
    ctx = params.ctx
    g = generators(ctx)
    p, q, r, s = (spec_tilde(c) for c in u.components)
    if not (p.is_zero() and q.is_zero() and r.is_zero()):
        return False
    if s != LaurentPoly.monomial(1, (0, 0, 2 * params.t - 1), ctx):
        return False
    u_tilde = mat_tilde(U)
    expected = mat_tilde(g.Z) ** (2 * params.t - 1) @ mat_tilde(g.C)
    return u_tilde == expected and u_tilde.det() == 1


def check_prop1(params: UnitParams, inverse: Optional[GroupRingElem] = None) -> Prop1Report:
    u = build_unit(params)
    U = embed(u)
    if inverse is None:
        inverse = invert_unit(u)
    return Prop1Report(
        det_u=U.det(),
        det_u_inv=embed(inverse).det(),
        bar_lemma=bar_lemma(params, u, U),
        tilde_lemma=tilde_lemma(params, u, U),
    )
