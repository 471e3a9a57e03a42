"""Exact verification of nontrivial units in group algebras of the Promislow group."""

from .endo import ZPowerEndo, apply_general, check_homomorphism, check_prop2
from .errors import (
    AlgebraError,
    CtxMismatch,
    ExponentOverflow,
    NonConstant,
    NotAUnit,
    NotInImage,
    NotInvertible,
    NotPrime,
    ZeroCoefficient,
)
from .group_ring import GroupRingElem, embed, extract, mul_crossed, mul_matrix
from .laurent import LaurentPoly, MonomialImage
from .matrix4 import Mat4, from_laurent, generators
from .prime_field import FieldCtx, FieldElement, from_int
from .prop1_checks import check_h_parity, check_prop1, spec_bar, spec_tilde
from .units import UnitParams, build_base_unit, build_h, build_unit, invert_unit, verify_unit

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "CtxMismatch", "ExponentOverflow", "NonConstant", "NotAUnit",
    "NotInImage", "NotInvertible", "NotPrime", "ZeroCoefficient",
    "FieldCtx", "FieldElement", "from_int",
    "LaurentPoly", "MonomialImage",
    "Mat4", "from_laurent", "generators",
    "GroupRingElem", "embed", "extract", "mul_crossed", "mul_matrix",
    "UnitParams", "build_base_unit", "build_h", "build_unit", "invert_unit", "verify_unit",
    "ZPowerEndo", "apply_general", "check_homomorphism", "check_prop2",
    "check_h_parity", "check_prop1", "spec_bar", "spec_tilde",
]
