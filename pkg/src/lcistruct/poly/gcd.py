"""Exact division and gcd for polynomials over QQ.

Only used to keep rational-function coefficients in lowest terms. The gcd is
the recursive primitive-remainder-sequence algorithm; results are monic for
lex order.
"""

from .orders import LEX
from .polynomial import Polynomial


class InexactDivision(ArithmeticError):
    pass


def divmod_poly(f, g):
    """Quotient and remainder of ``f`` by a single divisor under lex."""
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    key = LEX.key
    ge, gc = g.leading_term(LEX)
    ring = f.ring
    q = {}
    r = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=key)
        c = work[e]
        if all(a >= b for a, b in zip(e, ge)):
            s = tuple(a - b for a, b in zip(e, ge))
            qc = c / gc
            q[s] = qc
            for te, tc in g.terms.items():
                m = tuple(a + b for a, b in zip(te, s))
                v = work.get(m, 0) - qc * tc
                if v:
                    work[m] = v
                else:
                    work.pop(m, None)
        else:
            r[e] = c
            del work[e]
    return Polynomial(ring, q), Polynomial(ring, r)


def divexact(f, g):
    q, r = divmod_poly(f, g)
    if r.terms:
        raise InexactDivision(f"{g} does not divide {f}")
    return q


def _monomial_gcd(polys):
    exps = [e for p in polys for e in p.terms]
    return tuple(min(col) for col in zip(*exps))


def _as_univariate(f, i):
    """Coefficients of ``f`` in variable ``i``: ``{degree: poly free of i}``."""
    out = {}
    for e, c in f.terms.items():
        d = e[i]
        ne = e[:i] + (0,) + e[i + 1 :]
        out.setdefault(d, {})[ne] = c
    return {d: Polynomial(f.ring, t) for d, t in out.items()}


def _deg(f, i):
    return max((e[i] for e in f.terms), default=-1)


def _lead_in(f, i):
    d = _deg(f, i)
    return d, _as_univariate(f, i)[d]


def _xpow(ring, i, d):
    e = [0] * ring.nvars
    e[i] = d
    return ring.monomial(e)


def _normalize(f):
    return f.monic(LEX) if f.terms else f


def gcd(f, g):
    """Monic (lex) greatest common divisor of two polynomials over QQ."""
    ring = f.ring
    if not f.terms:
        return _normalize(g)
    if not g.terms:
        return _normalize(f)
    if len(f.terms) == 1 or len(g.terms) == 1:
        return ring.monomial(_monomial_gcd([f, g]))
    vf = {i for e in f.terms for i, a in enumerate(e) if a}
    vg = {i for e in g.terms for i, a in enumerate(e) if a}
    if not vf or not vg:
        return ring.one
    i = min(vf | vg)
    if i not in vf:
        return gcd(f, _content(g, i))
    if i not in vg:
        return gcd(_content(f, i), g)
    cf, cg = _content(f, i), _content(g, i)
    a, b = divexact(f, cf), divexact(g, cg)
    c = gcd(cf, cg)
    if _deg(a, i) < _deg(b, i):
        a, b = b, a
    while b.terms and _deg(b, i) > 0:
        r = _prem(a, b, i)
        a = b
        b = divexact(r, _content(r, i)) if r.terms else r
    h = a if not b.terms else ring.one
    if h.terms and _deg(h, i) > 0:
        h = divexact(h, _content(h, i))
    else:
        h = ring.one
    return _normalize(c * h)


def _content(f, i):
    coeffs = sorted(_as_univariate(f, i).values(), key=lambda p: len(p.terms))
    acc = coeffs[0]
    for p in coeffs[1:]:
        if acc.is_constant():
            break
        acc = gcd(acc, p)
    return _normalize(acc) if not acc.is_constant() else f.ring.one


def _prem(a, b, i):
    db, lb = _lead_in(b, i)
    r = a
    while r.terms and _deg(r, i) >= db:
        dr, lr = _lead_in(r, i)
        r = lb * r - lr * _xpow(r.ring, i, dr - db) * b
    return r
