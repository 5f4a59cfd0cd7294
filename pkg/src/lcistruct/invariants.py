"""Numerical invariants: Hilbert series, dimension, degree, Artinian length,
and minimal generator counts at a point."""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .groebner import Ideal, _divides, _minimalize
from .poly import GREVLEX, PolyRing, Polynomial

INFINITE = math.inf


class NotHomogeneous(ValueError):
    pass


class TruncationTooSmall(ValueError):
    """A truncation degree does not capture the ideal; carries the needed degree."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


def monomial_ideal(ring, exps):
    return Ideal(ring, [ring.monomial(e) for e in exps])


def all_monomials(nvars, degree):
    """Exponent tuples of total degree ``degree`` in ``nvars`` variables."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in all_monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def maximal_ideal_power(ring, names, n):
    """``(names)^n`` as a monomial ideal of ``ring``."""
    idx = [ring.index(v) for v in names]
    gens = []
    for sub in all_monomials(len(idx), n):
        e = [0] * ring.nvars
        for i, a in zip(idx, sub):
            e[i] = a
        gens.append(ring.monomial(e))
    return Ideal(ring, gens)


# -- Hilbert series -------------------------------------------------------------


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=4096)
def _numerator(gens):
    """Numerator of the Hilbert series of ``k[x]/(gens)`` over ``(1-t)^n``."""
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return (0,)
    m = gens[-1]
    rest = gens[:-1]
    head = list(_numerator(rest))
    quot = tuple(_minimalize([tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest]))
    tail = [0] * sum(m) + list(_numerator(quot))
    return tuple(_poly_sub(head, tail))


def _divide_one_minus_t(p):
    """Quotient of ``p`` by ``1 - t`` if exact, else ``None``."""
    if sum(p) != 0:
        return None
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return q or [0]


def _binomial_poly(shift, k):
    """Coefficients of ``C(t + shift, k)`` as a polynomial in ``t``."""
    coeffs = [Fraction(1)]
    for j in range(1, k + 1):
        # multiply by (t + shift - j + 1) / j
        c0 = Fraction(shift - j + 1, j)
        c1 = Fraction(1, j)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * c0
            nxt[i + 1] += c * c1
        coeffs = nxt
    return coeffs


def format_univariate(coeffs, var="t"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            s = mono
        elif mono:
            s = f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
        else:
            s = str(mag)
        sign = "-" if c < 0 else "+"
        terms.append((sign, s))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, s in terms[1:]:
        out += f" {sign} {s}"
    return out


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series ``numerator / (1-t)^nvars`` and what it determines."""

    nvars: int
    numerator: tuple
    reduced_numerator: tuple
    dimension: int
    degree: int
    hilbert_polynomial: tuple

    def hilbert_function(self, d):
        """Value of the Hilbert function at ``d`` from the series expansion."""
        total = 0
        for i, c in enumerate(self.numerator):
            if i <= d and c:
                total += c * math.comb(d - i + self.nvars - 1, self.nvars - 1)
        return total

    def polynomial_value(self, d):
        return sum(c * d**i for i, c in enumerate(self.hilbert_polynomial))

    def polynomial_str(self, var="t"):
        return format_univariate(list(self.hilbert_polynomial), var)

    def as_dict(self):
        return {
            "numerator": list(self.numerator),
            "dimension": self.dimension,
            "degree": self.degree,
            "hilbert_polynomial": self.polynomial_str(),
        }


def hilbert(ideal):
    """Hilbert data of ``R/I`` for a homogeneous ideal ``I``."""
    if not ideal.is_homogeneous():
        raise NotHomogeneous(f"{ideal} is not homogeneous")
    ring = ideal.ring
    n = ring.nvars
    leads = tuple(_minimalize(ideal.groebner(GREVLEX).leading_monomials))
    num = list(_numerator(leads))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    if num == [0]:
        return HilbertData(n, (0,), (0,), -1, 0, ())
    reduced = num
    k = 0
    while True:
        q = _divide_one_minus_t(reduced)
        if q is None:
            break
        reduced = q
        k += 1
    dim = n - k
    degree = sum(reduced)
    poly = [Fraction(0)] * max(dim, 1)
    if dim > 0:
        for i, c in enumerate(reduced):
            if c:
                for j, b in enumerate(_binomial_poly(dim - 1 - i, dim - 1)):
                    poly[j] += c * b
    while poly and poly[-1] == 0:
        poly.pop()
    return HilbertData(n, tuple(num), tuple(reduced), dim, degree, tuple(poly))


# -- dimension and length ---------------------------------------------------


def krull_dimension(ideal):
    """Krull dimension of ``R/I`` from the leading-term ideal; -1 for the unit ideal."""
    leads = _minimalize(ideal.groebner(GREVLEX).leading_monomials)
    n = ideal.ring.nvars
    if any(not any(m) for m in leads):
        return -1
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(all(i in s for i, a in enumerate(m) if a) for m in leads):
                return size
    return 0


def is_artinian(ideal):
    leads = ideal.groebner(ideal.ring.order).leading_monomials
    return _has_pure_powers(leads, ideal.ring.nvars)


def _has_pure_powers(leads, n):
    found = set()
    for m in leads:
        nz = [i for i, a in enumerate(m) if a]
        if not nz:
            return True
        if len(nz) == 1:
            found.add(nz[0])
    return len(found) == n


def standard_monomials(ideal, order=None):
    """Monomials outside the leading-term ideal; ``None`` if infinitely many."""
    leads = ideal.groebner(order or ideal.ring.order).leading_monomials
    n = ideal.ring.nvars
    if not _has_pure_powers(leads, n):
        return None
    return kernels.standard_monomials(leads, n)


def artinian_length(ideal, order=None):
    """``dim_k R/I``, or ``INFINITE`` when the quotient is not finite-dimensional."""
    leads = ideal.groebner(order or ideal.ring.order).leading_monomials
    n = ideal.ring.nvars
    if not _has_pure_powers(leads, n):
        return INFINITE
    return kernels.count_standard(leads, n)


def truncated_length(ideal, names, n):
    """``dim_k R/(I + (names)^n)`` for ``names`` covering every variable."""
    return artinian_length(ideal + maximal_ideal_power(ideal.ring, names, n))


# -- minimal generators at a point -----------------------------------------


def localize_at_point(ideal, point, names):
    """Substitute ``point`` and view the result in ``k[names]``."""
    ring = ideal.ring
    point = dict(point or {})
    names = list(names)
    target = PolyRing(names, ring.domain, GREVLEX)
    leftover = [v for v in ring.variables if v not in names and v not in point]
    if leftover:
        raise ValueError(f"variables {leftover} are neither local nor substituted")
    gens = []
    for g in ideal.gens:
        if point:
            g = g.subs(point)
        gens.append(g.to_ring(target))
    return Ideal(target, gens)


def contains_power_of_maximal(ideal, n):
    ring = ideal.ring
    monos = all_monomials(ring.nvars, n)
    leads = ideal.groebner(GREVLEX).leading_monomials
    if not all(any(_divides(l, e) for l in leads) for e in monos):
        return False
    return all(ideal.contains(ring.monomial(e)) for e in monos)


def local_min_gens(ideal, point=None, names=None, n=None, max_n=64):
    """Number of minimal generators of ``I`` in the local ring at the origin
    of ``names`` after substituting ``point`` for the other variables.

    Computed as ``dim (J + m^N) / (mJ + m^N)`` by linear algebra in the
    truncated ring. That quotient equals ``J/mJ`` once ``m^N ⊆ mJ``, which
    is guaranteed by checking ``m^(N-1) ⊆ J``.
    """
    point = dict(point or {})
    if names is None:
        names = [v for v in ideal.ring.variables if v not in point]
    local = localize_at_point(ideal, point, names)
    if local.is_zero():
        return 0
    if local.is_unit() or any(g.coefficient((0,) * g.ring.nvars) for g in local.gens):
        return 0
    explicit = n is not None
    if n is None:
        n = 2 * max(g.degree() for g in local.gens) + 2
    while not contains_power_of_maximal(local, n - 1):
        if explicit or n >= max_n:
            need = _required_truncation(local, max_n)
            if need is None:
                raise TruncationTooSmall(
                    f"{local} is not primary to the origin; no truncation captures it"
                )
            raise TruncationTooSmall(
                f"truncation degree {n} too small for {local}; need N >= {need}",
                required=need,
            )
        n = min(2 * n, max_n)
    return _min_gens_linear_algebra(local, n)


def _required_truncation(local, cap):
    length = artinian_length(local)
    if length == INFINITE:
        return None
    for k in range(1, length + 2):
        if contains_power_of_maximal(local, k):
            return k + 1
    return None


def _min_gens_linear_algebra(local, n):
    ring = local.ring
    nv = ring.nvars
    basis = [e for d in range(n) for e in all_monomials(nv, d)]
    col = {e: i for i, e in enumerate(basis)}
    gens = [g for g in local.gens]
    whole = []
    inner = []
    for g in gens:
        for e in basis:
            row = {}
            for ge, gc in g.terms.items():
                m = tuple(a + b for a, b in zip(ge, e))
                if sum(m) < n:
                    row[col[m]] = gc
            if not row:
                continue
            whole.append(row)
            if any(e):
                inner.append(row)
    return kernels.sparse_rank(whole) - kernels.sparse_rank(inner)


def min_gens_by_lengths(ideal):
    """``dim J/mJ`` as ``len R/mJ - len R/J`` for an ideal primary to the origin."""
    ring = ideal.ring
    m = Ideal(ring, ring.gens)
    return artinian_length(m * ideal) - artinian_length(ideal)
