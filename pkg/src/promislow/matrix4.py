"""4x4 matrices over GF(d)[x^±1, y^±1, z^±1].

Determinant and adjugate never divide: both are assembled from the 2x2 minors
of the row pairs (0, 1) and (2, 3), which is the 24-term permutation
expansion with its shared partial products factored out.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import CtxMismatch, NotInvertible
from .laurent import LaurentPoly, MonomialImage
from .prime_field import FieldCtx

_COL_PAIRS = list(combinations(range(4), 2))


def _complement(pair):
    return tuple(c for c in range(4) if c not in pair)


class Mat4:
    """Immutable 4x4 matrix of :class:`LaurentPoly` entries."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx: FieldCtx, rows: Sequence[Sequence]):
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Mat4 needs exactly 4 rows of 4 entries")
        out = []
        for r in rows:
            row = []
            for e in r:
                if isinstance(e, LaurentPoly):
                    if e.d != ctx.d:
                        raise CtxMismatch(ctx.d, e.d)
                else:
                    e = LaurentPoly.constant(e, ctx)
                row.append(e)
            out.append(tuple(row))
        self.ctx = ctx
        self.rows = tuple(out)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Mat4:
        z = LaurentPoly.zero(ctx)
        return cls(ctx, [[z] * 4 for _ in range(4)])

    @classmethod
    def identity(cls, ctx: FieldCtx) -> Mat4:
        return cls.diag([LaurentPoly.one(ctx)] * 4)

    @classmethod
    def diag(cls, entries: Sequence[LaurentPoly]) -> Mat4:
        ctx = entries[0].ctx
        z = LaurentPoly.zero(ctx)
        return cls(ctx, [[entries[i] if i == j else z for j in range(4)] for i in range(4)])

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(4))

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j].is_zero() for i in range(4) for j in range(4) if i != j)

    def _check(self, other: Mat4) -> None:
        if other.ctx.d != self.ctx.d:
            raise CtxMismatch(self.ctx.d, other.ctx.d)

    def __add__(self, other: Mat4) -> Mat4:
        if not isinstance(other, Mat4):
            return NotImplemented
        self._check(other)
        return Mat4(self.ctx, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Mat4) -> Mat4:
        if not isinstance(other, Mat4):
            return NotImplemented
        self._check(other)
        return Mat4(self.ctx, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> Mat4:
        return Mat4(self.ctx, [[-a for a in r] for r in self.rows])

    def __matmul__(self, other: Mat4) -> Mat4:
        if not isinstance(other, Mat4):
            return NotImplemented
        self._check(other)
        return Mat4(self.ctx, [_row_times(r, other) for r in self.rows])

    def row_times(self, i: int, other: Mat4):
        """Row ``i`` of ``self @ other`` without forming the rest of the product."""
        self._check(other)
        return _row_times(self.rows[i], other)

    def scale(self, c) -> Mat4:
        """Multiply every entry by a scalar or a Laurent polynomial."""
        return Mat4(self.ctx, [[a * c for a in r] for r in self.rows])

    def __pow__(self, e: int) -> Mat4:
        if e < 0:
            return self.inverse() ** (-e)
        result = Mat4.identity(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def _minors(self, r0: int, r1: int) -> dict:
        a, b = self.rows[r0], self.rows[r1]
        out = {}
        for i, j in _COL_PAIRS:
            out[(i, j)] = _prod(a[i], b[j]) - _prod(a[j], b[i])
        return out

    def det(self) -> LaurentPoly:
        """Exact determinant (Laplace expansion along rows 0 and 1)."""
        top = self._minors(0, 1)
        bottom = self._minors(2, 3)
        total = LaurentPoly.zero(self.ctx)
        for pair in _COL_PAIRS:
            term = _prod(top[pair], bottom[_complement(pair)])
            total = total - term if (1 + pair[0] + pair[1]) % 2 else total + term
        return total

    def adjugate(self) -> Mat4:
        """Transpose of the cofactor matrix, so that ``M @ adj(M) == det(M) * I``."""
        top = self._minors(0, 1)
        bottom = self._minors(2, 3)
        zero = LaurentPoly.zero(self.ctx)
        adj = [[zero] * 4 for _ in range(4)]
        for i in range(4):
            # row i is deleted; expand the 3x3 minor along the partner row of i's pair
            if i < 2:
                partner, minors, pos = 1 - i, bottom, 0
            else:
                partner, minors, pos = 5 - i, top, 2
            for j in range(4):
                cols = [c for c in range(4) if c != j]
                acc = zero
                for m, c in enumerate(cols):
                    rest = tuple(cc for cc in cols if cc != c)
                    term = _prod(self.rows[partner][c], minors[rest])
                    acc = acc - term if (pos + m) % 2 else acc + term
                adj[j][i] = -acc if (i + j) % 2 else acc
        return Mat4(self.ctx, adj)

    def inverse(self) -> Mat4:
        """Adjugate divided by the determinant; the determinant must be a monomial."""
        adj = self.adjugate()
        det = det_from_adjugate(self, adj)
        if det.monomial_unit() is None:
            raise NotInvertible(f"determinant {det} is not a unit")
        return adj.scale(det ** -1)

    def substitute(self, img_x: MonomialImage, img_y: MonomialImage, img_z: MonomialImage) -> Mat4:
        return Mat4(self.ctx, [[a.substitute(img_x, img_y, img_z) for a in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Mat4):
            return NotImplemented
        return self.ctx.d == other.ctx.d and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"Mat4(GF({self.ctx.d}),\n[{body}])"


def _prod(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero():
        return a
    if b.is_zero():
        return b
    return a * b


def _row_times(row, other: Mat4):
    zero = LaurentPoly.zero(other.ctx)
    out = []
    for j in range(4):
        acc = zero
        for k in range(4):
            if not row[k].is_zero() and not other.rows[k][j].is_zero():
                acc = acc + row[k] * other.rows[k][j]
        out.append(acc)
    return out


def det_from_adjugate(m: Mat4, adj: Mat4) -> LaurentPoly:
    # (M @ adj)[0][0] == det(M)
    acc = LaurentPoly.zero(m.ctx)
    for k in range(4):
        acc = acc + _prod(m.rows[0][k], adj.rows[k][0])
    return acc


class Generators(NamedTuple):
    A: Mat4
    B: Mat4
    C: Mat4
    X: Mat4
    Y: Mat4
    Z: Mat4


@lru_cache(maxsize=None)
def generators(ctx: FieldCtx) -> Generators:
    """Images of a, b, c = ab and of x = a^2, y = b^2, z = c^2."""

    def m(c, e):
        return LaurentPoly.monomial(c, e, ctx)

    o = LaurentPoly.zero(ctx)
    one = m(1, (0, 0, 0))
    x, y, z = m(1, (1, 0, 0)), m(1, (0, 1, 0)), m(1, (0, 0, 1))
    xi, yi, zi = m(1, (-1, 0, 0)), m(1, (0, -1, 0)), m(1, (0, 0, -1))
    A = Mat4(ctx, [
        [o, one, o, o],
        [x, o, o, o],
        [o, o, o, m(1, (-1, 1, -1))],
        [o, o, m(1, (0, -1, 1)), o],
    ])
    B = Mat4(ctx, [
        [o, o, one, o],
        [o, o, o, one],
        [y, o, o, o],
        [o, yi, o, o],
    ])
    C = Mat4(ctx, [
        [o, o, o, one],
        [o, o, x, o],
        [o, m(1, (-1, 0, -1)), o, o],
        [z, o, o, o],
    ])
    X = Mat4.diag([x, x, xi, xi])
    Y = Mat4.diag([y, yi, y, yi])
    Z = Mat4.diag([z, zi, zi, z])
    return Generators(A, B, C, X, Y, Z)


@lru_cache(maxsize=None)
def _diagonal_images(ctx: FieldCtx):
    g = generators(ctx)
    return tuple(
        tuple(MonomialImage.from_poly(D[i, i]) for D in (g.X, g.Y, g.Z)) for i in range(4)
    )


def from_laurent(p: LaurentPoly) -> Mat4:
    """Evaluate ``p`` at (X, Y, Z).  The result is diagonal."""
    images = _diagonal_images(p.ctx)
    return Mat4.diag([p.substitute(*images[i]) for i in range(4)])


# Named forms of the operations.

def mat_generators(ctx: FieldCtx) -> Generators:
    return generators(ctx)


def mat_mul(m: Mat4, n: Mat4) -> Mat4:
    return m @ n


def mat_add(m: Mat4, n: Mat4) -> Mat4:
    return m + n


def mat_det(m: Mat4) -> LaurentPoly:
    return m.det()


def mat_adjugate(m: Mat4) -> Mat4:
    return m.adjugate()


def mat_substitute(m: Mat4, img_x, img_y, img_z) -> Mat4:
    return m.substitute(img_x, img_y, img_z)


def mat_from_laurent(p: LaurentPoly) -> Mat4:
    return from_laurent(p)
