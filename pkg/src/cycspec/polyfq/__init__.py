"""Finite-field polynomial arithmetic, factorization of x**n - 1, and
minimal cyclic code construction."""

from .codes import (
    DEFAULT_CONSTRUCT_BUDGET,
    ExtensionField,
    MinimalCode,
    find_root_of_unity,
    minimal_codes,
)
from .factor import ddf, edf, factor_unity, is_irreducible
from .fields import Field, field
from .poly import (
    FqPoly,
    one,
    poly,
    poly_add,
    poly_deriv,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_monic,
    poly_mul,
    poly_neg,
    poly_pow_mod,
    poly_rem,
    poly_sub,
    unity_poly,
    x_poly,
    zero,
)

__all__ = [
    "DEFAULT_CONSTRUCT_BUDGET",
    "ExtensionField",
    "Field",
    "FqPoly",
    "MinimalCode",
    "ddf",
    "edf",
    "factor_unity",
    "field",
    "find_root_of_unity",
    "is_irreducible",
    "minimal_codes",
    "one",
    "poly",
    "poly_add",
    "poly_deriv",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "poly_monic",
    "poly_mul",
    "poly_neg",
    "poly_pow_mod",
    "poly_rem",
    "poly_sub",
    "unity_poly",
    "x_poly",
    "zero",
]
