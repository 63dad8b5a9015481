"""Exact field tower: Q, GF(p), F[x] and F(t)."""

from .fields import GF, QQ, Field, PrimeField, PrimeFieldElement, RationalField, is_prime, rational_sqrt
from .functions import (
    QQs,
    QQt,
    QQx,
    RationalFunction,
    RationalFunctionField,
    is_square_in_function_field,
)
from .polynomial import (
    Polynomial,
    discriminant,
    is_separable,
    poly_from_json,
    poly_gcd,
    poly_sqrt,
    poly_xgcd,
    resultant,
)

__all__ = [
    "GF", "QQ", "QQs", "QQt", "QQx", "Field", "PrimeField", "PrimeFieldElement", "RationalField",
    "RationalFunction", "RationalFunctionField", "Polynomial", "discriminant", "is_prime",
    "is_separable", "is_square_in_function_field", "poly_from_json", "poly_gcd", "poly_sqrt",
    "poly_xgcd", "rational_sqrt", "resultant",
]
