"""Exact coefficient domains: the rationals and rational-function fields."""

from fractions import Fraction
from numbers import Rational


class CoercionError(TypeError):
    pass


class RationalField:
    """QQ, with elements stored as :class:`fractions.Fraction`."""

    name = "QQ"
    params = ()
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, (int, Rational)):
            return Fraction(c)
        if isinstance(c, str):
            return Fraction(c)
        if getattr(c, "is_rational_constant", False):
            return c.constant_value()
        raise CoercionError(f"cannot convert {c!r} to QQ")

    def is_scalar(self, c):
        return isinstance(c, (int, Fraction, Rational))

    def format(self, c):
        """String for ``c`` and whether it is safe to juxtapose without parens."""
        return str(c), True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __str__(self):
        return "QQ"

    __repr__ = __str__


QQ = RationalField()
