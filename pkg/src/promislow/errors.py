"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(AlgebraError, ValueError):
    def __init__(self, d):
        super().__init__(f"d must be prime, got {d}")
        self.d = d


class CtxMismatch(AlgebraError, ValueError):
    def __init__(self, d1, d2):
        super().__init__(f"operands live over different fields: GF({d1}) vs GF({d2})")


class ZeroCoefficient(AlgebraError, ValueError):
    pass


class ExponentOverflow(AlgebraError, OverflowError):
    pass


class NotInvertible(AlgebraError, ArithmeticError):
    pass


class NotInImage(AlgebraError, ValueError):
    """A 4x4 matrix is not the image of any group ring element."""


class NotAUnit(AlgebraError, ArithmeticError):
    pass


class NonConstant(AlgebraError, ValueError):
    pass
