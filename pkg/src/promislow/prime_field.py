"""Arithmetic in GF(d) for a prime d chosen at runtime."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import CtxMismatch, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The prime field GF(d).  Construction fails unless d is prime."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or not is_prime(self.d):
            raise NotPrime(self.d)

    def __call__(self, n: int) -> FieldElement:
        return from_int(n, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1 % self.d, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.d)]


def ctx_new(d: int) -> FieldCtx:
    return FieldCtx(d)


def from_int(n: int, ctx: FieldCtx) -> FieldElement:
    return FieldElement(n % ctx.d, ctx)


@total_ordering
class FieldElement:
    """A residue class modulo ``ctx.d``, always held as its representative in [0, d)."""

    __slots__ = ("value", "ctx")

    def __init__(self, value: int, ctx: FieldCtx):
        object.__setattr__(self, "value", int(value) % ctx.d)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.ctx.d != self.ctx.d:
                raise CtxMismatch(self.ctx.d, other.ctx.d)
            return other
        if isinstance(other, int):
            return FieldElement(other, self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value + other.value, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value - other.value, self.ctx)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(other.value - self.value, self.ctx)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value, self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.ctx)

    def __pow__(self, e: int):
        if self.value == 0 and e < 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldElement(pow(self.value, e, self.ctx.d), self.ctx)

    def inverse(self) -> FieldElement:
        return self ** -1

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx.d == other.ctx.d and self.value == other.value
        if isinstance(other, int):
            # compare against the canonical representative only, keeping hash consistent
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.value < other.value

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.ctx.d})({self.value})"

    def __str__(self):
        return str(self.value)


# Named forms of the ring operations, for callers that prefer functions to operators.
def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a
