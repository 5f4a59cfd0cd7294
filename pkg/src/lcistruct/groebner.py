"""Buchberger's algorithm and ideal arithmetic.

Ideals cache one reduced Groebner basis per monomial order. Everything else
(membership, equality, intersection, colon, saturation, elimination) is built
on those bases.
"""

from . import kernels
from .poly import GREVLEX, MonomialOrder, Polynomial, PolyRing, RingMismatch, divexact
from .poly.orders import elimination


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _monic(terms, key):
    lead = max(terms, key=key)
    lc = terms[lead]
    if lc != 1:
        inv = 1 / lc
        terms = {e: c * inv for e, c in terms.items()}
    return lead, terms


def _is_constant(terms):
    return len(terms) == 1 and not any(next(iter(terms)))


def _unit(terms):
    e, c = next(iter(terms.items()))
    return {e: c / c}


def _entry(lead, terms):
    tail = [(e, c) for e, c in terms.items() if e != lead]
    return lead, tail


def buchberger(polys, order):
    """Reduced Groebner basis of term dicts under ``order``.

    Pairs are chosen by the normal strategy (smallest lcm, degree first) and
    pruned with the Gebauer-Moeller form of the coprime and chain criteria.
    Returns monic term dicts sorted by ascending leading monomial.
    """
    key, neg_key = order.key, order.neg_key
    leads = []
    terms = []
    active = []
    pairs = []

    def basis():
        return [_entry(leads[i], terms[i]) for i in active]

    def add(t):
        nonlocal pairs, active
        lead, t = _monic(t, key)
        h = len(leads)
        leads.append(lead)
        terms.append(t)
        cands = list(active)
        kept = []
        for k, g in enumerate(cands):
            l1 = _lcm(lead, leads[g])
            if _coprime(lead, leads[g]):
                kept.append(g)
                continue
            rest = cands[k + 1 :] + kept
            if not any(_divides(_lcm(lead, leads[g2]), l1) for g2 in rest):
                kept.append(g)
        new_pairs = [(g, h) for g in kept if not _coprime(lead, leads[g])]
        survivors = []
        for g1, g2 in pairs:
            l12 = _lcm(leads[g1], leads[g2])
            if (
                _divides(lead, l12)
                and _lcm(leads[g1], lead) != l12
                and _lcm(lead, leads[g2]) != l12
            ):
                continue
            survivors.append((g1, g2))
        pairs = survivors + new_pairs
        active = [g for g in active if not _divides(lead, leads[g])] + [h]

    def pair_rank(p):
        l = _lcm(leads[p[0]], leads[p[1]])
        return (sum(l), key(l), p)

    todo = [_monic(t, key) for t in polys if t]
    todo.sort(key=lambda lt: key(lt[0]))
    for _, t in todo:
        r = kernels.normal_form(t, basis(), neg_key) if active else t
        if r:
            if _is_constant(r):
                return [_unit(r)]
            add(r)

    while pairs:
        p = min(pairs, key=pair_rank)
        pairs.remove(p)
        i, j = p
        l = _lcm(leads[i], leads[j])
        mi = tuple(a - b for a, b in zip(l, leads[i]))
        mj = tuple(a - b for a, b in zip(l, leads[j]))
        s = {}
        for e, c in terms[i].items():
            if e != leads[i]:
                s[tuple(a + b for a, b in zip(e, mi))] = c
        for e, c in terms[j].items():
            if e != leads[j]:
                m = tuple(a + b for a, b in zip(e, mj))
                v = s.get(m)
                if v is None:
                    s[m] = -c
                else:
                    v = v - c
                    if v:
                        s[m] = v
                    else:
                        del s[m]
        if not s:
            continue
        r = kernels.normal_form(s, basis(), neg_key)
        if r:
            if _is_constant(r):
                return [_unit(r)]
            add(r)

    out = []
    for i in active:
        others = [_entry(leads[k], terms[k]) for k in active if k != i]
        t = kernels.normal_form(terms[i], others, neg_key) if others else terms[i]
        out.append(_monic(t, key))
    out.sort(key=lambda lt: key(lt[0]))
    return [t for _, t in out]


class GroebnerBasis:
    """Reduced Groebner basis of an ideal for one monomial order."""

    def __init__(self, ring, order, elements):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self._entries = [
            _entry(g.leading_monomial(order), g.terms) for g in self.elements
        ]

    @property
    def leading_monomials(self):
        return [e for e, _ in self._entries]

    def reduce(self, f):
        """Unique remainder of ``f`` modulo the basis."""
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        if not f.terms or not self._entries:
            return f
        return Polynomial(
            self.ring, kernels.normal_form(f.terms, self._entries, self.order.neg_key)
        )

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.order, self.elements))

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.elements) + "}"

    def __repr__(self):
        return f"GroebnerBasis({self}, order={self.order})"


class Ideal:
    """Ideal of a polynomial ring given by a finite generator list."""

    def __init__(self, ring, generators=()):
        gens = []
        seen = set()
        for g in generators:
            g = ring(g)
            if g.terms and g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.gens = tuple(gens)
        self._gb = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def from_variables(cls, ring, names):
        return cls(ring, [ring.var(v) for v in names])

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    # -- Groebner machinery ---------------------------------------------
    def groebner(self, order=None):
        order = order or self.ring.order
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        gb = self._gb.get(order)
        if gb is None:
            raw = buchberger([g.terms for g in self.gens], order)
            gb = GroebnerBasis(self.ring, order, [Polynomial(self.ring, t) for t in raw])
            # racing threads may both compute; reduced bases are unique so either wins
            self._gb[order] = gb
        return gb

    def _element(self, f):
        if isinstance(f, Polynomial) and f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        return self.ring(f)

    def normal_form(self, f, order=None):
        return self.groebner(order).reduce(self._element(f))

    def contains(self, f):
        f = self._element(f)
        if not f.terms:
            return True
        return not self.groebner(self._membership_order()).reduce(f).terms

    __contains__ = contains

    def _membership_order(self):
        if self._gb:
            if self.ring.order in self._gb:
                return self.ring.order
            return next(iter(self._gb))
        return self.ring.order

    def is_subset(self, other):
        self._check(other)
        return all(other.contains(g) for g in self.gens)

    __le__ = is_subset

    def equals(self, other):
        self._check(other)
        return self.groebner(GREVLEX).elements == other.groebner(GREVLEX).elements

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.equals(other)

    def __hash__(self):
        return hash((self.ring, self.groebner(GREVLEX).elements))

    def is_unit(self):
        gb = self.groebner(self._membership_order())
        return len(gb) == 1 and gb.elements[0].is_constant()

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("ideal power must be a nonnegative integer")
        result = Ideal.unit(self.ring)
        for _ in range(e):
            result = result * self
            if len(result.gens) > 24:
                result = Ideal(self.ring, result.groebner(GREVLEX).elements)
        return result

    def intersect(self, other):
        """Intersection via ``t*I + (1-t)*K`` and elimination of ``t``."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.ring)
        t = "_t"
        while t in self.ring.variables:
            t += "_"
        big = PolyRing((t,) + self.ring.variables, self.ring.domain, elimination(1))
        tv = big.var(t)
        gens = [tv * g.to_ring(big) for g in self.gens]
        gens += [(1 - tv) * g.to_ring(big) for g in other.gens]
        gb = Ideal(big, gens).groebner(big.order)
        kept = [g for g in gb if all(e[0] == 0 for e in g.terms)]
        return Ideal(self.ring, [g.to_ring(self.ring) for g in kept])

    def quotient_by(self, f):
        """``I : (f)``: exact division of the generators of ``I ∩ (f)`` by ``f``."""
        f = self.ring(f)
        if not f.terms or self.contains(f):
            return Ideal.unit(self.ring)
        inter = self.intersect(Ideal(self.ring, [f]))
        return Ideal(self.ring, [divexact(g, f) for g in inter.gens])

    def colon(self, other):
        """``I : K``, the intersection of ``I : k`` over the generators of ``K``."""
        if isinstance(other, Polynomial):
            return self.quotient_by(other)
        self._check(other)
        result = None
        for k in other.gens:
            q = self.quotient_by(k)
            if q.is_unit():
                continue
            result = q if result is None else result.intersect(q)
        return result if result is not None else Ideal.unit(self.ring)

    def saturate(self, other):
        """``I : K^oo``, iterating colons until the chain stops growing."""
        current = self
        while True:
            nxt = current.colon(other)
            if nxt.is_subset(current):
                return current
            current = nxt

    def eliminate(self, names):
        """Generators of ``I ∩ k[remaining variables]``, kept in the same ring."""
        names = list(names)
        for v in names:
            self.ring.index(v)
        rest = [v for v in self.ring.variables if v not in names]
        big = PolyRing(names + rest, self.ring.domain, elimination(len(names)))
        k = len(names)
        gb = Ideal(big, [g.to_ring(big) for g in self.gens]).groebner(big.order)
        kept = [g for g in gb if all(not any(e[:k]) for e in g.terms)]
        return Ideal(self.ring, [g.to_ring(self.ring) for g in kept])

    def map(self, phi, target):
        from .poly import apply_ring_map

        return Ideal(target, [apply_ring_map(phi, g, target) for g in self.gens])

    def to_ring(self, ring):
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def minimal_monomial_generators(self, order=None):
        """Minimal generators of the leading-term ideal."""
        return _minimalize(self.groebner(order or GREVLEX).leading_monomials)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"Ideal{self} in {self.ring}"


def _minimalize(monos):
    out = []
    for m in sorted(set(monos), key=lambda e: (sum(e), e)):
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def groebner(ideal, order=None):
    return ideal.groebner(order)


def member(f, ideal):
    return ideal.contains(f)


def normal_form(f, ideal, order=None):
    return ideal.normal_form(f, order)


def ideal_equal(a, b):
    return a.equals(b)


def ideal_ops(a, b, op, *, exponent=None, names=None):
    """Dispatch ``sum|product|power|intersect|colon|saturate|eliminate``."""
    if op == "sum":
        return a + b
    if op == "product":
        return a * b
    if op == "power":
        return a ** exponent
    if op == "intersect":
        return a.intersect(b)
    if op == "colon":
        return a.colon(b)
    if op == "saturate":
        return a.saturate(b)
    if op == "eliminate":
        return a.eliminate(names)
    raise ValueError(f"unknown ideal operation {op!r}")
