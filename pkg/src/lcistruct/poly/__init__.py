"""Exact multivariate polynomial arithmetic."""

from .domains import QQ, CoercionError, RationalField
from .gcd import InexactDivision, divexact, divmod_poly, gcd
from .orders import GREVLEX, LEX, MonomialOrder, elimination
from .polynomial import (
    Polynomial,
    PolyRing,
    RingMismatch,
    apply_ring_map,
    format_polynomial,
    truncate,
)
from .ratfunc import FractionField, RationalFunction
from .textparse import PolynomialSyntaxError, parse_polynomial


def poly_arith(f, g, op):
    """``op`` is one of ``"add"``, ``"sub"``, ``"mul"``."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "QQ",
    "CoercionError",
    "FractionField",
    "GREVLEX",
    "InexactDivision",
    "LEX",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PolynomialSyntaxError",
    "RationalField",
    "RationalFunction",
    "RingMismatch",
    "apply_ring_map",
    "divexact",
    "divmod_poly",
    "elimination",
    "format_polynomial",
    "gcd",
    "parse_polynomial",
    "poly_arith",
    "truncate",
]
