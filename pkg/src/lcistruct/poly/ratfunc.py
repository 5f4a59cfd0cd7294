"""Rational-function fields QQ(u, v, ...) used as coefficients.

Elements are kept in lowest terms with a lex-monic denominator, so equal
values have identical representations and hash alike.
"""

from fractions import Fraction
from numbers import Rational

from .domains import QQ, CoercionError
from .gcd import divexact, gcd
from .orders import LEX
from .polynomial import Polynomial, PolyRing, format_polynomial


class FractionField:
    """Field of fractions of ``QQ[params]``."""

    def __init__(self, params):
        if isinstance(params, str):
            params = [p.strip() for p in params.split(",") if p.strip()]
        self.params = tuple(params)
        self.base = PolyRing(self.params, QQ, LEX)
        self.name = f"QQ({','.join(self.params)})"
        self.zero = RationalFunction(self, self.base.zero, self.base.one, _reduced=True)
        self.one = RationalFunction(self, self.base.one, self.base.one, _reduced=True)

    def param(self, name):
        return RationalFunction(self, self.base.var(name), self.base.one, _reduced=True)

    def convert(self, c):
        if isinstance(c, RationalFunction):
            if c.field == self:
                return c
            return RationalFunction(self, c.num.to_ring(self.base), c.den.to_ring(self.base))
        if isinstance(c, (int, Fraction, Rational)):
            return RationalFunction(self, self.base.const(c), self.base.one, _reduced=True)
        if isinstance(c, Polynomial):
            if c.ring.domain == QQ:
                return RationalFunction(self, c.to_ring(self.base), self.base.one, _reduced=True)
        if isinstance(c, str):
            return RationalFunction(self, self.base.parse(c), self.base.one, _reduced=True)
        raise CoercionError(f"cannot convert {c!r} to {self.name}")

    def is_scalar(self, c):
        return isinstance(c, (int, Fraction, Rational, RationalFunction))

    def format(self, c):
        return c.format()

    def __eq__(self, other):
        return isinstance(other, FractionField) and other.params == self.params

    def __hash__(self):
        return hash(("FF", self.params))

    def __str__(self):
        return self.name

    __repr__ = __str__


class RationalFunction:
    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den, _reduced=False):
        if not den.terms:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.terms:
            num, den = field.base.zero, field.base.one
        elif not _reduced:
            if not den.is_constant():
                g = gcd(num, den)
                if not g.is_constant():
                    num, den = divexact(num, g), divexact(den, g)
            lc = den.leading_coefficient(LEX)
            if lc != 1:
                inv = 1 / lc
                num, den = num.scale(inv), den.scale(inv)
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise CoercionError("rational functions over different fields")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return self.field.convert(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.field, self.num + o.num, self.den)
        return RationalFunction(
            self.field, self.num * o.den + o.num * self.den, self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.field, -self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.num.terms or not o.num.terms:
            return self.field.zero
        if o.den.is_constant() and self.den.is_constant():
            return RationalFunction(self.field, self.num * o.num, self.den * o.den)
        return RationalFunction(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num.terms:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return self.field.one / (self ** -e)
        return RationalFunction(self.field, self.num ** e, self.den ** e, _reduced=True)

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    @property
    def is_rational_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_rational_constant:
            raise ValueError(f"{self} is not a rational constant")
        return self.num.constant_value() / self.den.constant_value()

    def evaluate(self, values):
        """Value at a point ``{param: rational}``; raises on a pole."""
        n = self.num.subs(values)
        d = self.den.subs(values)
        if not d:
            raise ZeroDivisionError(f"{self} has a pole at {values}")
        return n.constant_value() / d.constant_value()

    def format(self):
        """String and whether it can be juxtaposed without parentheses."""
        n = format_polynomial(self.num)
        if self.den == 1:
            atomic = len(self.num.terms) == 1 and not (
                self.num.is_constant() and "/" in n
            )
            if atomic and n.startswith("-"):
                atomic = False
            return n, atomic
        d = format_polynomial(self.den)
        if len(self.num.terms) > 1 or n.startswith("-"):
            n = f"({n})"
        if len(self.den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"({n}/{d})", True

    def __str__(self):
        return self.format()[0]

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"
