"""Sparse multivariate polynomials over an exact coefficient domain."""

from fractions import Fraction

from .. import kernels
from .domains import QQ, CoercionError
from .orders import GREVLEX, MonomialOrder


class RingMismatch(ValueError):
    """Operands live in different polynomial rings."""


class PolyRing:
    """Polynomial ring over ``domain`` in named variables.

    Two rings are equal when they have the same variables and domain; the
    monomial order is only a default for printing and Groebner bases.
    """

    def __init__(self, variables, domain=QQ, order=GREVLEX):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        if set(variables) & set(domain.params):
            raise ValueError("variables clash with coefficient parameters")
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        self.variables = variables
        self.domain = domain
        self.order = order
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}
        self._zero_exp = (0,) * self.nvars

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.variables, self.domain))

    def __str__(self):
        return f"{self.domain}[{','.join(self.variables)}]"

    def __repr__(self):
        return f"PolyRing({str(self)!r}, order={self.order})"

    def with_order(self, order):
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        return PolyRing(self.variables, self.domain, order)

    def with_variables(self, variables, order=None):
        return PolyRing(variables, self.domain, order or self.order)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    # -- element construction --------------------------------------------
    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.const(1)

    @property
    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.domain.one})

    __getitem__ = var

    def const(self, c):
        c = self.domain.convert(c)
        return Polynomial(self, {self._zero_exp: c} if c else {})

    def monomial(self, exp, c=1):
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError("exponent vector has wrong arity")
        c = self.domain.convert(c)
        return Polynomial(self, {exp: c} if c else {})

    def from_terms(self, terms):
        """Polynomial from an ``{exp: coeff}`` mapping, dropping zeros."""
        conv = self.domain.convert
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError("exponent vector has wrong arity")
            c = conv(c)
            if c:
                out[e] = c
        return Polynomial(self, out)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return x.to_ring(self)
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def parse(self, text):
        from .textparse import parse_polynomial

        return parse_polynomial(self, text)


class Polynomial:
    """Immutable sparse polynomial. ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        try:
            return self.ring.const(other)
        except CoercionError:
            return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            if not self.terms or not other.terms:
                return self.ring.zero
            return Polynomial(self.ring, kernels.mul_terms(self.terms, other.terms))
        try:
            c = self.ring.domain.convert(other)
        except CoercionError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            if not other.is_constant():
                raise ValueError("division by a non-constant polynomial")
            other = other.constant_value()
        else:
            other = self.ring.domain.convert(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / other)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            other = self.ring.const(other)
        except CoercionError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- structure --------------------------------------------------------
    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_value(self):
        if not self.terms:
            return self.ring.domain.zero
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    @property
    def is_rational_constant(self):
        return self.ring.domain == QQ and self.is_constant()

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, names):
        idx = [self.ring.index(n) for n in names]
        return max((sum(e[i] for i in idx) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d):
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def used_variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return [v for i, v in enumerate(self.ring.variables) if i in used]

    def diff(self, name):
        """Partial derivative with respect to variable ``name``."""
        i = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[ne] = c * e[i]
        return Polynomial(self.ring, out)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.domain.zero)

    def sorted_terms(self, order=None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order=None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or self.ring.order).key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def monic(self, order=None):
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(1 / lc)

    # -- ring changes -----------------------------------------------------
    def to_ring(self, ring):
        """Reinterpret in ``ring`` by matching variable names."""
        if ring == self.ring:
            return self
        src = self.ring.variables
        pos = []
        for i, v in enumerate(src):
            if v in ring._index:
                pos.append(ring._index[v])
            else:
                pos.append(None)
        conv = ring.domain.convert
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if pos[i] is None:
                        raise RingMismatch(f"variable {src[i]} is not in {ring}")
                    ne[pos[i]] = a
            out[tuple(ne)] = conv(c)
        return Polynomial(ring, out)

    def subs(self, values):
        """Substitute ``{name: value}``; values may be scalars or polynomials."""
        ring = self.ring
        phi = {}
        for name, v in values.items():
            phi[name] = v if isinstance(v, Polynomial) else ring.const(v)
        return apply_ring_map(phi, self, ring)

    def truncate(self, names, n):
        return truncate(self, names, n)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ring={self.ring})"


def format_polynomial(f, order=None):
    if not f.terms:
        return "0"
    names = f.ring.variables
    fmt = f.ring.domain.format
    parts = []
    for e, c in f.sorted_terms(order):
        mono = "*".join(
            n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a
        )
        neg = False
        if isinstance(c, Fraction):
            if c < 0:
                neg, c = True, -c
        elif fmt(c)[0].startswith("-"):
            # polynomial coefficient with a single negative term
            neg, c = True, -c
        if not mono:
            s, _ = fmt(c)
        elif c == 1:
            s = mono
        else:
            s, atomic = fmt(c)
            if not atomic and not s.startswith("("):
                s = f"({s})"
            s = f"{s}*{mono}"
        if parts:
            parts.append(("- " if neg else "+ ") + s)
        else:
            parts.append(("-" if neg else "") + s)
    return " ".join(parts)


def apply_ring_map(phi, f, target=None):
    """Substitution homomorphism sending variable ``v`` of ``f.ring`` to ``phi[v]``.

    Variables missing from ``phi`` go to the same-named variable of ``target``.
    """
    src = f.ring
    if target is None:
        images = [p for p in phi.values() if isinstance(p, Polynomial)]
        target = images[0].ring if images else src
    for name in phi:
        if name not in src._index:
            raise RingMismatch(f"map sends {name!r}, which is not a variable of {src}")
    imgs = []
    for v in src.variables:
        if v in phi:
            p = phi[v]
            if not isinstance(p, Polynomial):
                p = target.const(p)
            elif p.ring != target:
                raise RingMismatch(f"image of {v} lives in {p.ring}, expected {target}")
            imgs.append(p)
        else:
            try:
                imgs.append(target.var(v))
            except KeyError:
                raise RingMismatch(f"no image given for {v} and {target} lacks it") from None
    powers = [{0: target.one, 1: g} for g in imgs]

    def power(i, a):
        cache = powers[i]
        if a not in cache:
            cache[a] = power(i, a // 2) * power(i, a - a // 2)
        return cache[a]

    conv = target.domain.convert
    acc = {}
    for e, c in f.terms.items():
        term = target.const(conv(c))
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        for te, tc in term.terms.items():
            v = acc.get(te)
            if v is None:
                acc[te] = tc
            else:
                v = v + tc
                if v:
                    acc[te] = v
                else:
                    del acc[te]
    return Polynomial(target, acc)


def truncate(f, names, n):
    """Drop every term whose total degree in ``names`` is at least ``n``."""
    if n < 0:
        raise ValueError("truncation degree must be nonnegative")
    idx = [f.ring.index(v) for v in names]
    return Polynomial(
        f.ring, {e: c for e, c in f.terms.items() if sum(e[i] for i in idx) < n}
    )
