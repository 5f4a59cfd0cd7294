"""Binary forms with coefficients in a ring: discriminant, Hessian,
resultant, and nonvanishing tests."""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import Ideal
from .invariants import is_artinian
from .poly import QQ, PolyRing, Polynomial


class UnsupportedContext(ValueError):
    pass


def _expanded_ring(base, names):
    if base is None:
        return PolyRing(names, QQ)
    if isinstance(base, PolyRing):
        if set(names) & set(base.variables):
            raise ValueError(f"form variables {names} clash with {base}")
        return PolyRing(tuple(base.variables) + tuple(names), base.domain)
    return PolyRing(names, base)


@dataclass
class BinaryForm:
    """``sum C(n,i) a_i e1^(n-i) e2^i`` with ``coeffs = (a_0, ..., a_n)``.

    ``base`` is the coefficient ring (a :class:`PolyRing`, a coefficient
    domain, or ``None`` for QQ). ``twist`` and ``variance`` are bookkeeping
    tags for the line-bundle and dual factors; no computation reads them.
    """

    coeffs: tuple
    base: object = None
    names: tuple = ("e1", "e2")
    twist: dict = field(default_factory=dict)
    variance: str = "section"

    def __post_init__(self):
        self.coeffs = tuple(self.coeffs)
        if len(self.coeffs) < 3:
            raise ValueError("a binary form here has degree at least 2")
        self.names = tuple(self.names)
        self.ring = _expanded_ring(self.base, self.names)

    @classmethod
    def from_monomial_values(cls, values, **kw):
        """Form whose coefficient of ``e1^(n-i) e2^i`` is ``values[i]``."""
        n = len(values) - 1
        return cls(tuple(_scale(v, Fraction(1, math.comb(n, i))) for i, v in enumerate(values)), **kw)

    @property
    def n(self):
        return len(self.coeffs) - 1

    def _lift(self, c):
        if isinstance(c, Polynomial):
            return c.to_ring(self.ring)
        return self.ring.const(c)

    def expand(self):
        n = self.n
        e1, e2 = (self.ring.var(v) for v in self.names)
        total = self.ring.zero
        for i, a in enumerate(self.coeffs):
            total = total + self._lift(a) * (e1 ** (n - i) * e2**i) * math.comb(n, i)
        return total

    def monomial_values(self):
        n = self.n
        return tuple(_scale(a, math.comb(n, i)) for i, a in enumerate(self.coeffs))


def _scale(c, k):
    if isinstance(c, Polynomial):
        return c.scale(c.ring.domain.convert(k))
    return c * k


def discriminant(q):
    """``b^2 - ac`` for ``q = a e1^2 + 2b e1 e2 + c e2^2``."""
    if q.n != 2:
        raise ValueError(f"discriminant needs a quadratic form, got degree {q.n}")
    a, b, c = q.coeffs
    return b * b - a * c


def hessian_of(f, e1="e1", e2="e2"):
    """``F_11 F_22 - F_12^2`` for a polynomial ``f``."""
    f11 = f.diff(e1).diff(e1)
    f22 = f.diff(e2).diff(e2)
    f12 = f.diff(e1).diff(e2)
    return f11 * f22 - f12 * f12


def hessian(q):
    """Hessian of the expanded form, in the ring of coefficients and ``e1, e2``."""
    return hessian_of(q.expand(), *q.names)


# -- resultants --------------------------------------------------------------


def _determinant(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                k = m[r][c] * inv
                m[r] = [a - k * b for a, b in zip(m[r], m[c])]
    return det


def _binary_coeffs(f, u, v):
    """Coefficients of ``u^(d-i) v^i`` for a form in ``u, v`` only."""
    ring = f.ring
    iu, iv = ring.index(u), ring.index(v)
    if not f.is_homogeneous() or f.is_zero():
        raise ValueError(f"{f} is not a nonzero binary form")
    d = f.degree()
    out = [Fraction(0)] * (d + 1)
    for e, c in f.terms.items():
        if any(a for i, a in enumerate(e) if i not in (iu, iv)):
            raise ValueError(f"{f} involves variables other than {u}, {v}")
        if ring.domain != QQ:
            raise ValueError("resultants are computed over QQ")
        out[e[iv]] = c
    return out


def resultant(f, g, u, v):
    """Sylvester resultant of two binary forms in ``u, v`` over QQ."""
    a = _binary_coeffs(f, u, v)
    b = _binary_coeffs(g, u, v)
    p, q = len(a) - 1, len(b) - 1
    size = p + q
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(q):
        rows.append([0] * i + a + [0] * (size - p - 1 - i))
    for i in range(p):
        rows.append([0] * i + b + [0] * (size - q - 1 - i))
    return _determinant(rows)


# -- nonvanishing --------------------------------------------------------------

UNIT = "unit-in-field"
NO_COMMON_ZERO = "parameter-forms-without-common-zeros"


def _used(forms):
    ring = forms[0].ring
    used = set()
    for f in forms:
        used.update(f.used_variables())
    return [v for v in ring.variables if v in used]


def no_common_zero_artinian(forms, variables=None):
    """No common zero in projective space over the algebraic closure,
    tested as finiteness of ``k[variables]/(forms)``."""
    forms = list(forms)
    variables = list(variables or _used(forms))
    if not variables:
        return any(not f.is_zero() for f in forms)
    sub = PolyRing(variables, forms[0].ring.domain)
    ideal = Ideal(sub, [f.to_ring(sub) for f in forms])
    if not ideal.is_homogeneous():
        raise ValueError("common-zero test needs homogeneous forms")
    return is_artinian(ideal)


def nowhere_vanishing(g, context=UNIT, variables=None, method="auto"):
    """Decide nonvanishing of ``g`` in the declared context.

    ``unit-in-field``: ``g`` is a nonzero constant.
    ``parameter-forms-without-common-zeros``: ``g`` is a sequence of forms in
    the parameters; true iff they have no common projective zero. Two binary
    forms use the resultant; otherwise (or with ``method="artinian"``) the
    quotient ring is tested for finite length.
    """
    if context == UNIT:
        if isinstance(g, Polynomial):
            return g.is_constant() and not g.is_zero()
        return bool(g)
    if context != NO_COMMON_ZERO:
        raise UnsupportedContext(f"unsupported context {context!r}")
    forms = [g] if isinstance(g, Polynomial) else list(g)
    if not forms:
        raise ValueError("no forms given")
    vs = list(variables or _used(forms))
    if method == "resultant" or (method == "auto" and len(forms) == 2 and len(vs) == 2):
        if len(forms) != 2 or len(vs) != 2:
            raise UnsupportedContext("resultant route needs two forms in two variables")
        return resultant(forms[0], forms[1], *vs) != 0
    if method not in ("auto", "artinian"):
        raise ValueError(f"unknown method {method!r}")
    return no_common_zero_artinian(forms, vs)
