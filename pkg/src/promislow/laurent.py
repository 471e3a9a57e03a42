"""Sparse Laurent polynomials in x, y, z over GF(d).

A polynomial is stored as two read-only numpy arrays: an ``(n, 3)`` int64 array
of exponent triples sorted lexicographically ascending, and an ``(n,)`` int64
array of coefficients in ``[1, d)``.  The zero polynomial has ``n == 0``.
Products are computed by forming every pairwise term product at once and then
merging equal exponents, which keeps the inner loop inside numpy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import CtxMismatch, ExponentOverflow, NotInvertible, ZeroCoefficient
from .prime_field import FieldCtx, FieldElement

ExpTriple = Tuple[int, int, int]
Coeff = Union[int, FieldElement]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1
# GF(d) products must stay inside int64 before reduction
MAX_MODULUS = 2**31

VARIABLES = ("x", "y", "z")

_EMPTY_EXPS = np.zeros((0, 3), dtype=np.int64)
_EMPTY_COEFFS = np.zeros(0, dtype=np.int64)
for _a in (_EMPTY_EXPS, _EMPTY_COEFFS):
    _a.flags.writeable = False

_PAIR_CHUNK = 1 << 21
# below this many term pairs a dict loop beats numpy's per-call overhead
_SMALL_PAIRS = 256


def _check_exponent(e: int) -> int:
    if not INT64_MIN <= e <= INT64_MAX:
        raise ExponentOverflow(f"exponent {e} does not fit in a signed 64-bit integer")
    return e


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _canonical(exps: np.ndarray, coeffs: np.ndarray, d: int):
    """Sort terms lexicographically, merge repeated exponents and drop zero coefficients."""
    n = len(coeffs)
    if n == 0:
        return _EMPTY_EXPS, _EMPTY_COEFFS
    coeffs = coeffs % d
    lo = [int(v) for v in exps.min(axis=0)]
    hi = [int(v) for v in exps.max(axis=0)]
    spans = [h - l + 1 for l, h in zip(lo, hi)]
    total = spans[0] * spans[1] * spans[2]

    if total < 2**62:
        key = ((exps[:, 0] - lo[0]) * spans[1] + (exps[:, 1] - lo[1])) * spans[2] + (exps[:, 2] - lo[2])
        if total <= max(4 * n, 4096) and n * d < 2**52:
            sums = np.bincount(key, weights=coeffs, minlength=total).astype(np.int64) % d
            keys = np.flatnonzero(sums)
            vals = sums[keys]
        else:
            order = np.argsort(key, kind="stable")
            key = key[order]
            start = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
            vals = np.add.reduceat(coeffs[order], start) % d
            keep = vals != 0
            keys, vals = key[start][keep], vals[keep]
        k = keys % spans[2]
        rest = keys // spans[2]
        j = rest % spans[1]
        i = rest // spans[1]
        out = np.empty((len(keys), 3), dtype=np.int64)
        out[:, 0] = i + lo[0]
        out[:, 1] = j + lo[1]
        out[:, 2] = k + lo[2]
        return _freeze(out), _freeze(vals.astype(np.int64))

    order = np.lexsort((exps[:, 2], exps[:, 1], exps[:, 0]))
    e = exps[order]
    start = np.flatnonzero(np.r_[True, np.any(e[1:] != e[:-1], axis=1)])
    vals = np.add.reduceat(coeffs[order], start) % d
    keep = vals != 0
    return _freeze(np.ascontiguousarray(e[start][keep])), _freeze(vals[keep].astype(np.int64))


def _sum_bounds_ok(ea: np.ndarray, eb: np.ndarray) -> None:
    lo = [a + b for a, b in zip(ea.min(axis=0).tolist(), eb.min(axis=0).tolist())]
    hi = [a + b for a, b in zip(ea.max(axis=0).tolist(), eb.max(axis=0).tolist())]
    if min(lo) < INT64_MIN or max(hi) > INT64_MAX:
        raise ExponentOverflow("exponent sum does not fit in a signed 64-bit integer")


def _from_dict(acc: dict, d: int):
    items = sorted((e, c % d) for e, c in acc.items() if c % d)
    if not items:
        return _EMPTY_EXPS, _EMPTY_COEFFS
    exps = [e for e, _ in items]
    if min(min(e) for e in exps) < INT64_MIN or max(max(e) for e in exps) > INT64_MAX:
        raise ExponentOverflow("exponent does not fit in a signed 64-bit integer")
    return (
        _freeze(np.array(exps, dtype=np.int64)),
        _freeze(np.array([c for _, c in items], dtype=np.int64)),
    )


def _small_mul(ea, ca, eb, cb, d):
    acc: dict = {}
    get = acc.get
    right = list(zip(map(tuple, eb.tolist()), cb.tolist()))
    for (i, j, k), c in zip(ea.tolist(), ca.tolist()):
        for (i2, j2, k2), c2 in right:
            key = (i + i2, j + j2, k + k2)
            acc[key] = get(key, 0) + c * c2
    return _from_dict(acc, d)


def _shift(exps: np.ndarray, by) -> np.ndarray:
    for col in range(3):
        if len(exps):
            _check_exponent(int(exps[:, col].min()) + int(by[col]))
            _check_exponent(int(exps[:, col].max()) + int(by[col]))
    return _freeze(exps + np.asarray(by, dtype=np.int64))


def _mul_arrays(ea, ca, eb, cb, d):
    if len(ca) == 0 or len(cb) == 0:
        return _EMPTY_EXPS, _EMPTY_COEFFS
    if len(ca) > len(cb):
        ea, ca, eb, cb = eb, cb, ea, ca
    if len(ca) == 1:
        # a single term shifts exponents uniformly, so lex order and distinctness survive
        return _shift(eb, ea[0]), _freeze(cb * ca[0] % d)
    if len(ca) * len(cb) <= _SMALL_PAIRS:
        return _small_mul(ea, ca, eb, cb, d)
    _sum_bounds_ok(ea, eb)
    rows = max(1, _PAIR_CHUNK // len(cb))
    parts_e, parts_c = [], []
    for s in range(0, len(ca), rows):
        e = (ea[s:s + rows, None, :] + eb[None, :, :]).reshape(-1, 3)
        c = (ca[s:s + rows, None] * cb[None, :]).ravel()
        pe, pc = _canonical(e, c, d)
        parts_e.append(pe)
        parts_c.append(pc)
    if len(parts_e) == 1:
        return parts_e[0], parts_c[0]
    return _canonical(np.concatenate(parts_e), np.concatenate(parts_c), d)


class LaurentPoly:
    """An element of GF(d)[x^±1, y^±1, z^±1].

    Instances are immutable.  ``terms`` maps exponent triples to coefficients;
    integer coefficients are reduced mod d and zero coefficients are dropped.
    """

    __slots__ = ("ctx", "_exps", "_coeffs", "_hash")

    def __init__(self, ctx: FieldCtx, terms: Optional[Mapping[ExpTriple, Coeff]] = None):
        if ctx.d >= MAX_MODULUS:
            raise ValueError(f"modulus {ctx.d} too large, need d < {MAX_MODULUS}")
        self.ctx = ctx
        self._hash = None
        if not terms:
            self._exps, self._coeffs = _EMPTY_EXPS, _EMPTY_COEFFS
            return
        exps, coeffs = [], []
        for e, c in terms.items():
            if len(e) != 3:
                raise ValueError(f"exponent triple expected, got {e!r}")
            exps.append([_check_exponent(int(v)) for v in e])
            coeffs.append(_coeff_value(c, ctx))
        self._exps, self._coeffs = _canonical(
            np.array(exps, dtype=np.int64).reshape(-1, 3), np.array(coeffs, dtype=np.int64), ctx.d
        )

    @classmethod
    def _raw(cls, ctx: FieldCtx, exps: np.ndarray, coeffs: np.ndarray) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._exps = exps
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, ctx: FieldCtx) -> LaurentPoly:
        return cls._raw(ctx, _EMPTY_EXPS, _EMPTY_COEFFS)

    @classmethod
    def one(cls, ctx: FieldCtx) -> LaurentPoly:
        return cls.monomial(1, (0, 0, 0), ctx)

    @classmethod
    def constant(cls, c: Coeff, ctx: FieldCtx) -> LaurentPoly:
        return cls(ctx, {(0, 0, 0): c})

    @classmethod
    def monomial(cls, coeff: Coeff, exps: ExpTriple, ctx: Optional[FieldCtx] = None) -> LaurentPoly:
        """``coeff * x^i * y^j * z^k``; the coefficient must be nonzero in GF(d)."""
        if ctx is None:
            if not isinstance(coeff, FieldElement):
                raise TypeError("ctx is required for an integer coefficient")
            ctx = coeff.ctx
        c = _coeff_value(coeff, ctx)
        if c == 0:
            raise ZeroCoefficient("a monomial needs a nonzero coefficient")
        e = np.array([[_check_exponent(int(v)) for v in exps]], dtype=np.int64)
        return cls._raw(ctx, _freeze(e), _freeze(np.array([c], dtype=np.int64)))

    # inspection

    @property
    def d(self) -> int:
        return self.ctx.d

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Tuple[ExpTriple, FieldElement]]:
        ctx = self.ctx
        for e, c in zip(self._exps.tolist(), self._coeffs.tolist()):
            yield (e[0], e[1], e[2]), FieldElement(c, ctx)

    def terms(self) -> dict:
        return dict(self)

    def raw_terms(self) -> list:
        """``[(coeff, (i, j, k)), ...]`` with plain ints, in lex order of exponents."""
        return [(c, (e[0], e[1], e[2])) for e, c in zip(self._exps.tolist(), self._coeffs.tolist())]

    def coefficient(self, exps: ExpTriple) -> FieldElement:
        hit = np.flatnonzero(np.all(self._exps == np.asarray(exps, dtype=np.int64), axis=1))
        return FieldElement(int(self._coeffs[hit[0]]) if len(hit) else 0, self.ctx)

    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    def monomial_unit(self) -> Optional[Tuple[FieldElement, ExpTriple]]:
        """``(f, (i, j, k))`` when the polynomial is ``f * x^i y^j z^k``, else None.

        These are exactly the units of the Laurent ring.
        """
        if len(self._coeffs) != 1:
            return None
        e = self._exps[0].tolist()
        return FieldElement(int(self._coeffs[0]), self.ctx), (e[0], e[1], e[2])

    def constant_value(self) -> Optional[FieldElement]:
        """The value of a constant polynomial, or None if any variable occurs."""
        if self.is_zero():
            return self.ctx.zero
        m = self.monomial_unit()
        if m is None or m[1] != (0, 0, 0):
            return None
        return m[0]

    def max_abs_exponent(self) -> int:
        return int(np.abs(self._exps).max()) if len(self._exps) else 0

    # arithmetic

    def _check(self, other: LaurentPoly) -> None:
        if other.ctx.d != self.ctx.d:
            raise CtxMismatch(self.ctx.d, other.ctx.d)

    def _lift(self, other) -> Optional[LaurentPoly]:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            if other.ctx.d != self.ctx.d:
                raise CtxMismatch(self.ctx.d, other.ctx.d)
            return LaurentPoly.constant(other, self.ctx)
        if isinstance(other, (int, np.integer)):
            return LaurentPoly.constant(int(other), self.ctx)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if len(self) + len(other) <= 32:
            acc = dict(zip(map(tuple, self._exps.tolist()), self._coeffs.tolist()))
            for e, c in zip(map(tuple, other._exps.tolist()), other._coeffs.tolist()):
                acc[e] = acc.get(e, 0) + c
            return LaurentPoly._raw(self.ctx, *_from_dict(acc, self.d))
        e, c = _canonical(
            np.concatenate([self._exps, other._exps]), np.concatenate([self._coeffs, other._coeffs]), self.d
        )
        return LaurentPoly._raw(self.ctx, e, c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.ctx, self._exps, _freeze((self.d - self._coeffs) % self.d))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        e, c = _mul_arrays(self._exps, self._coeffs, other._exps, other._coeffs, self.d)
        return LaurentPoly._raw(self.ctx, e, c)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> LaurentPoly:
        if isinstance(c, FieldElement) and c.ctx.d != self.d:
            raise CtxMismatch(self.d, c.ctx.d)
        v = _coeff_value(c, self.ctx)
        if v == 0:
            return LaurentPoly.zero(self.ctx)
        return LaurentPoly._raw(self.ctx, self._exps, _freeze(self._coeffs * v % self.d))

    def shift(self, exps: ExpTriple) -> LaurentPoly:
        """Multiply by the monomial ``x^i y^j z^k``."""
        if self.is_zero():
            return self
        return LaurentPoly._raw(self.ctx, _shift(self._exps, exps), self._coeffs)

    def __pow__(self, e: int) -> LaurentPoly:
        e = int(e)
        mono = self.monomial_unit()
        if e < 0 and mono is None:
            raise NotInvertible(f"only monomials are invertible; this polynomial has {len(self)} terms")
        if mono is not None:
            c, ex = mono
            return LaurentPoly.monomial(c ** e, tuple(_check_exponent(v * e) for v in ex), self.ctx)
        result = LaurentPoly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> LaurentPoly:
        return self ** -1

    def substitute(self, img_x: MonomialImage, img_y: MonomialImage, img_z: MonomialImage) -> LaurentPoly:
        """Apply the ring homomorphism sending x, y, z to the given scalar monomials."""
        imgs = (img_x, img_y, img_z)
        for img in imgs:
            if img.coeff.ctx.d != self.d:
                raise CtxMismatch(self.d, img.coeff.ctx.d)
        if self.is_zero():
            return self
        d = self.d
        maxabs = [int(np.abs(self._exps[:, v]).max()) for v in range(3)]
        for col in range(3):
            _check_exponent(sum(maxabs[v] * abs(imgs[v].exps[col]) for v in range(3)))
        mat = np.array([img.exps for img in imgs], dtype=np.int64)
        exps = self._exps @ mat
        coeffs = self._coeffs
        for v, img in enumerate(imgs):
            c = img.coeff.value
            if c == 1:
                continue
            uniq, inv = np.unique(self._exps[:, v], return_inverse=True)
            powers = np.array([pow(c, int(k), d) for k in uniq], dtype=np.int64)
            coeffs = coeffs * powers[inv] % d
        e, c = _canonical(exps, coeffs, d)
        return LaurentPoly._raw(self.ctx, e, c)

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            other = self._lift(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        return np.array_equal(self._exps, other._exps) and np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, self._exps.tobytes(), self._coeffs.tobytes()))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # text

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly(GF({self.d}), {render(self)})"


def _coeff_value(c: Coeff, ctx: FieldCtx) -> int:
    if isinstance(c, FieldElement):
        if c.ctx.d != ctx.d:
            raise CtxMismatch(ctx.d, c.ctx.d)
        return c.value
    return int(c) % ctx.d


@dataclass(frozen=True)
class MonomialImage:
    """Target ``coeff * x^i y^j z^k`` of one variable under a substitution."""

    coeff: FieldElement
    exps: ExpTriple

    def __post_init__(self):
        if self.coeff.value == 0:
            raise ZeroCoefficient("a variable must map to a unit")
        object.__setattr__(self, "exps", tuple(_check_exponent(int(v)) for v in self.exps))

    @classmethod
    def of(cls, coeff: Coeff, exps: ExpTriple, ctx: FieldCtx) -> MonomialImage:
        return cls(FieldElement(_coeff_value(coeff, ctx), ctx), exps)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> MonomialImage:
        m = p.monomial_unit()
        if m is None:
            raise NotInvertible(f"{p} is not a scalar monomial")
        return cls(*m)

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.coeff, self.exps)


def identity_images(ctx: FieldCtx):
    return tuple(MonomialImage.of(1, e, ctx) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def gens(ctx: FieldCtx):
    """The variables x, y, z as polynomials."""
    return tuple(LaurentPoly.monomial(1, e, ctx) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


# text form

def _render_term(c: int, e) -> str:
    parts = []
    for name, k in zip(VARIABLES, e):
        if k == 1:
            parts.append(name)
        elif k != 0:
            parts.append(f"{name}^{k}")
    if not parts:
        return str(c)
    if c != 1:
        parts.insert(0, str(c))
    return "*".join(parts)


def _display_key(term):
    _, (i, j, k) = term
    return (i + j + k, -i, -j, -k)


def render(p: LaurentPoly) -> str:
    """Human-readable form such as ``1 + x + y + x*y``.

    Terms go by total degree, and within a degree x before y before z,
    so ``(1+x)(1+y)(1+z)`` reads ``1 + x + y + z + x*y + x*z + y*z + x*y*z``.
    """
    if p.is_zero():
        return "0"
    return " + ".join(_render_term(c, e) for c, e in sorted(p.raw_terms(), key=_display_key))


_FACTOR = re.compile(r"^([xyz])(?:\^(-?\d+))?$")


def parse(text: str, ctx: FieldCtx) -> LaurentPoly:
    """Inverse of :func:`render` (coefficients are reduced mod d)."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(ctx)
    terms: dict = {}
    for raw in text.split("+"):
        raw = raw.strip()
        if not raw:
            raise ValueError(f"empty term in {text!r}")
        coeff = 1
        exps = [0, 0, 0]
        for tok in raw.split("*"):
            tok = tok.strip()
            if re.fullmatch(r"-?\d+", tok):
                coeff *= int(tok)
                continue
            m = _FACTOR.match(tok)
            if not m:
                raise ValueError(f"cannot parse factor {tok!r}")
            exps[VARIABLES.index(m.group(1))] += int(m.group(2) or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(ctx, terms)


# Named forms of the operations.

def poly_zero(ctx: FieldCtx) -> LaurentPoly:
    return LaurentPoly.zero(ctx)


def poly_one(ctx: FieldCtx) -> LaurentPoly:
    return LaurentPoly.one(ctx)


def poly_monomial(coeff: FieldElement, exps: ExpTriple) -> LaurentPoly:
    return LaurentPoly.monomial(coeff, exps)


def poly_substitute(p, img_x, img_y, img_z) -> LaurentPoly:
    return p.substitute(img_x, img_y, img_z)
