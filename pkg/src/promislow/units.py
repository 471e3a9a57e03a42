"""The family of nontrivial units u(d, t, w, n) in GF(d)[G] and their inverses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import NotAUnit, NotInImage
from .group_ring import GroupRingElem, embed, extract
from .laurent import LaurentPoly, gens
from .matrix4 import det_from_adjugate
from .prime_field import FieldCtx


@dataclass(frozen=True)
class UnitParams:
    """Prime characteristic ``d``, integer shifts ``t`` and ``w``, and ``n >= 1``."""

    d: int
    t: int = 0
    w: int = 0
    n: int = 1
    ctx: FieldCtx = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ctx", FieldCtx(self.d))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        assert (1 - 2 * self.t) % 2 == 1

    @property
    def zeta_exponent(self) -> int:
        """h is a polynomial in zeta = z^(1-2t)."""
        return 1 - 2 * self.t

    def as_tuple(self):
        return (self.d, self.t, self.w, self.n)


def build_h(params: UnitParams) -> LaurentPoly:
    """h = (1 - zeta)^(d-2) * (1 + zeta^d + ... + zeta^((n-1)d)) with zeta = z^(1-2t).

    This is (1 - zeta^(nd)) / (1 - zeta)^2 written without division.
    """
    ctx = params.ctx
    e = params.zeta_exponent
    one = LaurentPoly.one(ctx)
    zeta = LaurentPoly.monomial(1, (0, 0, e), ctx)
    geometric = LaurentPoly(ctx, {(0, 0, e * params.d * m): 1 for m in range(params.n)})
    return (one - zeta) ** (params.d - 2) * geometric


def build_unit(params: UnitParams) -> GroupRingElem:
    ctx = params.ctx
    t, w = params.t, params.w
    x, y, z = gens(ctx)
    one = LaurentPoly.one(ctx)
    xi, yi = x ** -1, y ** -1
    h = build_h(params)
    zt = z ** t
    z_shift = zt + z ** (1 - t)
    zw = z ** w

    p = (one + x) * (one + y) * z_shift * h
    q = zw * ((one + x) * (xi + yi) + (one + yi) * (one + z ** (2 * t - 1))) * h
    r = zw * ((one + yi) * (x + y) * zt + (one + x) * z_shift) * h
    s = z ** (2 * t - 1) + (4 + x + xi + y + yi) * h
    return GroupRingElem(p, q, r, s)


def build_base_unit(d: int, n: int = 1) -> GroupRingElem:
    """u_0, the unit with t = w = 0."""
    return build_unit(UnitParams(d, 0, 0, n))


def invert_unit(u: GroupRingElem) -> GroupRingElem:
    """Inverse via the adjugate of the embedded matrix.

    Raises NotAUnit when the determinant is not a monomial; a monomial
    determinant is exactly the condition for the embedded matrix to be invertible.
    """
    m = embed(u)
    adj = m.adjugate()
    det = det_from_adjugate(m, adj)
    if det.monomial_unit() is None:
        raise NotAUnit(f"determinant {det} is not a monomial")
    return extract(adj.scale(det ** -1))


@dataclass
class UnitReport:
    is_unit: bool
    # nontrivial means a unit that is not a scalar multiple of a group element
    is_nontrivial: bool
    det: LaurentPoly
    support: int
    inverse: Optional[GroupRingElem] = None

    @property
    def ok(self) -> bool:
        return self.is_unit and self.is_nontrivial and self.det == 1


def verify_unit(u: GroupRingElem) -> UnitReport:
    m = embed(u)
    adj = m.adjugate()
    det = det_from_adjugate(m, adj)
    support = u.support_size()
    inverse = None
    is_unit = False
    if det.monomial_unit() is not None:
        try:
            inverse = extract(adj.scale(det ** -1))
        except NotInImage:
            inverse = None
        if inverse is not None:
            is_unit = (u * inverse).is_one() and (inverse * u).is_one()
    return UnitReport(
        is_unit=is_unit,
        is_nontrivial=is_unit and support > 1,
        det=det,
        support=support,
        inverse=inverse if is_unit else None,
    )

