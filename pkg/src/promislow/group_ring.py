"""Elements of GF(d)[G] as coefficient quadruples over the coset basis 1, a, b, c.

G = <a, b | (a^2)^b = a^-2, (b^2)^a = b^-2> contains the free abelian normal
subgroup H = <x, y, z> with x = a^2, y = b^2, z = (ab)^2, and every element is
uniquely ``p + q*a + r*b + s*c`` with p, q, r, s in GF(d)[H].

Two multiplications are provided.  :func:`mul_matrix` goes through the faithful
4x4 representation (right multiplication on the free left GF(d)[H]-module with
basis 1, a, b, c).  :func:`mul_crossed` multiplies quadruples directly using a
conjugation action and a table of products of coset representatives, and
serves as an independent check on the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from .errors import CtxMismatch, NotInImage
from .laurent import ExpTriple, LaurentPoly, MonomialImage, identity_images
from .matrix4 import Mat4, from_laurent, generators
from .prime_field import FieldCtx

COSETS = ("1", "a", "b", "c")


class GroupRingElem:
    """``p + q*a + r*b + s*c`` with Laurent polynomial coefficients."""

    __slots__ = ("ctx", "p", "q", "r", "s")

    def __init__(self, p: LaurentPoly, q: LaurentPoly, r: LaurentPoly, s: LaurentPoly):
        ctx = p.ctx
        for part in (q, r, s):
            if part.d != ctx.d:
                raise CtxMismatch(ctx.d, part.d)
        self.ctx = ctx
        self.p, self.q, self.r, self.s = p, q, r, s

    @classmethod
    def from_components(cls, ctx: FieldCtx, p=0, q=0, r=0, s=0) -> GroupRingElem:
        """Build from polynomials or integer constants."""

        def lift(v):
            return v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v, ctx)

        return cls(lift(p), lift(q), lift(r), lift(s))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> GroupRingElem:
        return cls.from_components(ctx)

    @classmethod
    def one(cls, ctx: FieldCtx) -> GroupRingElem:
        return cls.from_components(ctx, p=1)

    @classmethod
    def group_element(cls, ctx: FieldCtx, coset: str, exps: ExpTriple = (0, 0, 0), coeff=1) -> GroupRingElem:
        """``coeff * x^i y^j z^k * rep`` for ``rep`` one of "1", "a", "b", "c"."""
        parts = [LaurentPoly.zero(ctx)] * 4
        parts[COSETS.index(coset)] = LaurentPoly.monomial(coeff, exps, ctx)
        return cls(*parts)

    @property
    def components(self) -> Tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.p, self.q, self.r, self.s)

    def _check(self, other: GroupRingElem) -> None:
        if other.ctx.d != self.ctx.d:
            raise CtxMismatch(self.ctx.d, other.ctx.d)

    def __add__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        self._check(other)
        return GroupRingElem(*(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        self._check(other)
        return GroupRingElem(*(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return GroupRingElem(*(-a for a in self.components))

    def __mul__(self, other):
        if isinstance(other, GroupRingElem):
            return mul_matrix(self, other)
        if isinstance(other, LaurentPoly):
            # left multiplication by an element of GF(d)[H]
            return GroupRingElem(*(other * a for a in self.components))
        return GroupRingElem(*(a * other for a in self.components))

    def __rmul__(self, other):
        if isinstance(other, LaurentPoly):
            return self * other
        return GroupRingElem(*(a * other for a in self.components))

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        self._check(other)
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.components)

    def is_one(self) -> bool:
        return self == GroupRingElem.one(self.ctx)

    def support_size(self) -> int:
        return sum(len(a) for a in self.components)

    def is_trivial_unit(self) -> bool:
        """True for a nonzero scalar times a single group element."""
        return self.support_size() == 1

    def embed(self) -> Mat4:
        return embed(self)

    def __repr__(self):
        parts = [f"{name}: {c}" for name, c in zip(COSETS, self.components)]
        return f"GroupRingElem(GF({self.ctx.d}); " + "; ".join(parts) + ")"


def embed(u: GroupRingElem) -> Mat4:
    """Matrix of right multiplication by ``u``: P + Q*A + R*B + S*C."""
    g = generators(u.ctx)
    m = from_laurent(u.p)
    for coeff, gen in ((u.q, g.A), (u.r, g.B), (u.s, g.C)):
        if not coeff.is_zero():
            m = m + from_laurent(coeff) @ gen
    return m


def extract(m: Mat4) -> GroupRingElem:
    """Recover ``u`` from ``embed(u)``; row 0 holds the coordinates of 1*u.

    Raises NotInImage unless re-embedding reproduces ``m`` exactly.
    """
    u = GroupRingElem(*m.rows[0])
    if embed(u) != m:
        raise NotInImage("matrix is not the image of a group ring element")
    return u


def mul_matrix(u: GroupRingElem, v: GroupRingElem) -> GroupRingElem:
    """``extract(embed(u) @ embed(v))``.

    The image of the embedding is closed under products, so only row 0 of the
    product is formed, and row 0 of ``embed(u)`` is ``(p, q, r, s)`` itself.
    """
    u._check(v)
    zero = LaurentPoly.zero(u.ctx)
    ev = embed(v)
    out = []
    for j in range(4):
        acc = zero
        for k, uk in enumerate(u.components):
            vkj = ev[k, j]
            if not uk.is_zero() and not vkj.is_zero():
                acc = acc + uk * vkj
        out.append(acc)
    return GroupRingElem(*out)


@dataclass(frozen=True)
class CosetAction:
    """Conjugation ``h -> rep * h * rep^-1`` of each coset representative on H.

    ``images[i]`` holds the images of x, y, z under representative ``COSETS[i]``.
    """

    images: Tuple[Tuple[MonomialImage, MonomialImage, MonomialImage], ...]

    def apply(self, rep: int, p: LaurentPoly) -> LaurentPoly:
        if rep == 0:
            return p
        return p.substitute(*self.images[rep])

    def compose(self, outer: int, inner: int):
        """Images of x, y, z under conjugation by rep_outer * rep_inner."""
        return compose_images(self.images[outer], self.images[inner])


def compose_images(outer, inner):
    """Substitution ``h -> outer(inner(h))``."""
    return tuple(MonomialImage.from_poly(img.as_poly().substitute(*outer)) for img in inner)


def derive_coset_action(ctx: FieldCtx) -> CosetAction:
    """The action read off from the presentation.

    a fixes x = a^2 and inverts y = b^2 (since (b^2)^a = b^-2); b likewise
    inverts x and fixes y; both invert z.  The action of c = ab is the composite.
    """
    ident = identity_images(ctx)

    def img(e):
        return MonomialImage.of(1, e, ctx)

    act_a = (img((1, 0, 0)), img((0, -1, 0)), img((0, 0, -1)))
    act_b = (img((-1, 0, 0)), img((0, 1, 0)), img((0, 0, -1)))
    act_c = compose_images(act_a, act_b)
    return CosetAction((ident, act_a, act_b, act_c))


CosetTable = Dict[Tuple[int, int], Tuple[LaurentPoly, int]]


def derive_coset_table(ctx: FieldCtx) -> CosetTable:
    """``(i, j) -> (twist, k)`` with rep_i * rep_j = twist * rep_k.

    Each product of generator matrices must be a diagonal matrix times exactly
    one representative's matrix, and the diagonal factor must be the image of
    a coefficient-1 monomial; anything else raises.
    """
    g = generators(ctx)
    reps = (Mat4.identity(ctx), g.A, g.B, g.C)
    table: CosetTable = {}
    for i, gi in enumerate(reps):
        for j, gj in enumerate(reps):
            prod = gi @ gj
            nonzero = [k for k in range(4) if not prod[0, k].is_zero()]
            if len(nonzero) != 1:
                raise NotInImage(f"{COSETS[i]}*{COSETS[j]} does not land in a single coset")
            k = nonzero[0]
            twist = prod[0, k]
            mono = twist.monomial_unit()
            if mono is None or mono[0].value != 1:
                raise NotInImage(f"{COSETS[i]}*{COSETS[j]} twist {twist} is not a group element of H")
            if from_laurent(twist) @ reps[k] != prod:
                raise NotInImage(f"{COSETS[i]}*{COSETS[j]} is not {twist}*{COSETS[k]}")
            table[(i, j)] = (twist, k)
    return table


@lru_cache(maxsize=None)
def crossed_structure(ctx: FieldCtx) -> Tuple[CosetAction, CosetTable]:
    return derive_coset_action(ctx), derive_coset_table(ctx)


def mul_crossed(u: GroupRingElem, v: GroupRingElem, action: CosetAction = None, table: CosetTable = None) -> GroupRingElem:
    """(q_i rep_i)(q_j rep_j) = q_i * (rep_i q_j rep_i^-1) * twist_ij * rep_k, summed."""
    u._check(v)
    if action is None or table is None:
        action, table = crossed_structure(u.ctx)
    out = [LaurentPoly.zero(u.ctx)] * 4
    for i, ui in enumerate(u.components):
        if ui.is_zero():
            continue
        for j, vj in enumerate(v.components):
            if vj.is_zero():
                continue
            twist, k = table[(i, j)]
            out[k] = out[k] + (ui * action.apply(i, vj)).shift(twist.monomial_unit()[1])
    return GroupRingElem(*out)


# Named forms of the operations.

def gre_embed(u: GroupRingElem) -> Mat4:
    return embed(u)


def gre_extract(m: Mat4) -> GroupRingElem:
    return extract(m)


def gre_mul_matrix(u: GroupRingElem, v: GroupRingElem) -> GroupRingElem:
    return mul_matrix(u, v)


def gre_mul_crossed(u, v, action=None, table=None) -> GroupRingElem:
    return mul_crossed(u, v, action, table)


def gre_support_size(u: GroupRingElem) -> int:
    return u.support_size()


def gre_is_trivial_unit(u: GroupRingElem) -> bool:
    return u.is_trivial_unit()
