"""Exact arithmetic: the coefficient-ring tower, parsing, linear algebra."""
from .cyclotomic import cyclotomic_poly
from .hom import hom_apply
from .laurent import LaurentPoly
from .linalg import charpoly
from .parse import parse_scalar
from .rings import (
    QQ,
    ZZ,
    CyclotomicField,
    FractionField,
    Integers,
    PolynomialRing,
    PrimeField,
    Rationals,
    Ring,
    Scalar,
    fraction_field,
    ring_from_descriptor,
)

__all__ = [
    "QQ",
    "ZZ",
    "CyclotomicField",
    "FractionField",
    "Integers",
    "LaurentPoly",
    "PolynomialRing",
    "PrimeField",
    "Rationals",
    "Ring",
    "Scalar",
    "charpoly",
    "cyclotomic_poly",
    "fraction_field",
    "hom_apply",
    "parse_scalar",
    "ring_from_descriptor",
]
