"""Multiple structures ``Y`` on a linear support ``X``: nilpotency index, the
three canonical filtrations, generic-point lengths, type and property checks.

Notation: ``I`` is the ideal of the support, ``J`` the ideal of the
structure, ``m`` the largest integer with ``I^m`` not inside ``J``.

* M filtration: ``I_l = J : I^(m+1-l)``
* A filtration: ``J_l = J : (J : I^l)``
* BF filtration: ``I^l + J`` with embedded components removed. Exact at a
  point; for a linear support it is computed at the generic point, where
  localization has already removed them.
"""

from dataclasses import dataclass, field

from .groebner import Ideal
from .invariants import INFINITE, artinian_length
from .poly import QQ, FractionField, PolyRing, GREVLEX
from .report import Report

MAX_NILPOTENCY = 64


class InvalidStructure(ValueError):
    pass


@dataclass(frozen=True)
class Filtration:
    kind: str
    ideals: tuple
    localized: bool

    def __len__(self):
        return len(self.ideals)

    def __getitem__(self, i):
        return self.ideals[i]

    def lengths(self):
        return [artinian_length(q) for q in self.ideals]

    def ranks(self):
        ls = self.lengths()
        return [ls[i + 1] - ls[i] for i in range(len(ls) - 1)]


@dataclass(frozen=True)
class StructureType:
    m: int
    A_ranks: tuple
    M_ranks: tuple
    B_ranks: tuple
    A_lengths: tuple
    M_lengths: tuple
    B_lengths: tuple
    multiplicity: int

    def as_dict(self):
        return {
            "m": self.m,
            "A_ranks": list(self.A_ranks),
            "M_ranks": list(self.M_ranks),
            "B_ranks": list(self.B_ranks),
            "A_lengths": list(self.A_lengths),
            "M_lengths": list(self.M_lengths),
            "B_lengths": list(self.B_lengths),
            "multiplicity": self.multiplicity,
        }


@dataclass
class GenericPointModel:
    """Ideals pushed to the generic point of a linear support.

    The support variables become the ring variables; the parameter variables
    left after applying ``chart`` become transcendentals of the coefficient
    field.
    """

    source: PolyRing
    ring: PolyRing
    chart: dict
    support: Ideal = None
    structure: Ideal = None

    def map_polynomial(self, f):
        if self.ring is self.source:
            return f
        if self.chart:
            f = f.subs(self.chart)
        local_idx = [self.source.index(v) for v in self.ring.variables]
        field_ = self.ring.domain
        param_idx = [self.source.index(p) for p in field_.params] if field_.params else []
        base = field_.base if field_.params else None
        acc = {}
        for e, c in f.terms.items():
            le = tuple(e[i] for i in local_idx)
            if base is not None:
                pe = [0] * base.nvars
                for j, i in enumerate(param_idx):
                    pe[j] = e[i]
                coeff = base.monomial(pe, c)
                acc[le] = acc.get(le, base.zero) + coeff
            else:
                acc[le] = acc.get(le, 0) + c
        if base is not None:
            return self.ring.from_terms({e: field_.convert(p) for e, p in acc.items() if p})
        return self.ring.from_terms(acc)

    def map_ideal(self, ideal):
        if self.ring is self.source:
            return ideal
        return Ideal(self.ring, [self.map_polynomial(g) for g in ideal.gens])


class MultipleStructure:
    """Pair ``(I, J)`` with ``J ⊆ I`` and every generator of ``I`` nilpotent mod ``J``.

    ``params`` lists the variables that parametrize the support; with no
    parameters the support is the origin. ``chart`` dehomogenizes the
    parameters for the generic point (default: last parameter set to 1).
    """

    def __init__(self, support, structure, params=None, chart=None, name=""):
        if support.ring != structure.ring:
            raise InvalidStructure("support and structure live in different rings")
        ring = support.ring
        self.ring = ring
        self.support = support
        self.structure = structure
        self.name = name
        gens_vars = []
        for g in support.gens:
            used = g.used_variables()
            if len(g.terms) != 1 or g.degree() != 1:
                raise InvalidStructure(
                    f"support must be generated by variables; got generator {g}"
                )
            gens_vars.extend(used)
        self.support_vars = [v for v in ring.variables if v in gens_vars]
        if params is None:
            params = [v for v in ring.variables if v not in self.support_vars]
        self.params = list(params)
        if set(self.params) & set(self.support_vars):
            raise InvalidStructure("a parameter variable also cuts out the support")
        if set(self.params) | set(self.support_vars) != set(ring.variables):
            raise InvalidStructure("every variable must be a support or parameter variable")
        self.kind = "linear" if self.params else "point"
        if chart is None:
            chart = {self.params[-1]: 1} if self.params else {}
        self.chart = dict(chart)
        if not structure.is_subset(support):
            raise InvalidStructure("structure ideal J is not contained in support ideal I")
        for v in self.support_vars:
            x = ring.var(v)
            if not any(structure.contains(x**k) for k in range(1, MAX_NILPOTENCY + 1)):
                raise InvalidStructure(f"no power of {v} up to {MAX_NILPOTENCY} lies in J")
        self._cache = {}

    def _memo(self, key, fn):
        # same key, same value: a race only duplicates work
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    # -- basic invariants ---------------------------------------------------
    def nilpotency_index(self):
        def compute():
            power = Ideal.unit(self.ring)
            for k in range(0, MAX_NILPOTENCY + 1):
                nxt = power * self.support
                if nxt.is_subset(self.structure):
                    return k
                power = nxt
            raise InvalidStructure(f"I^k not inside J for k <= {MAX_NILPOTENCY + 1}")

        return self._memo("m", compute)

    def support_power(self, k, localized=False):
        def compute():
            base = self.localize().support if localized else self.support
            return base**k

        return self._memo(("pow", k, localized), compute)

    def localize(self):
        """Generic-point model; the identity model for point support."""

        def compute():
            if self.kind == "point":
                return GenericPointModel(self.ring, self.ring, {}, self.support, self.structure)
            remaining = [p for p in self.params if p not in self.chart]
            domain = FractionField(remaining) if remaining else QQ
            if self.ring.domain != QQ:
                raise InvalidStructure("localization needs a structure defined over QQ")
            local = PolyRing(self.support_vars, domain, GREVLEX)
            model = GenericPointModel(self.ring, local, dict(self.chart))
            model.support = model.map_ideal(self.support)
            model.structure = model.map_ideal(self.structure)
            return model

        return self._memo("local", compute)

    def multiplicity(self):
        model = self.localize()
        return artinian_length(model.structure)

    # -- filtrations ------------------------------------------------------
    def filtration(self, kind, localized=None):
        """``kind`` in ``BF``, ``A``, ``M``; indices run over ``0..m+1``."""
        if localized is None:
            localized = self.kind == "linear"
        if kind == "BF" and self.kind == "linear" and not localized:
            raise InvalidStructure(
                "the BF filtration of a linear support is only computed at the generic point"
            )
        if kind not in ("BF", "A", "M"):
            raise ValueError(f"unknown filtration {kind!r}")
        return self._memo(("filt", kind, localized), lambda: self._filtration(kind, localized))

    def _filtration(self, kind, localized):
        m = self.nilpotency_index()
        if localized and self.kind == "linear":
            model = self.localize()
            J, ring = model.structure, model.ring
        else:
            J, ring = self.structure, self.ring
        if kind == "BF":
            ideals = [self.support_power(l, localized) + J for l in range(m + 2)]
        elif kind == "M":
            ideals = [J.colon(self.support_power(m + 1 - l, localized)) for l in range(m + 2)]
        else:
            M = self.filtration("M", localized)
            ideals = [J.colon(M[m + 1 - l]) for l in range(m + 2)]
        ideals = [Ideal(ring, q.groebner(GREVLEX).elements) for q in ideals]
        return Filtration(kind, tuple(ideals), localized)

    def structure_type(self):
        def compute():
            m = self.nilpotency_index()
            local = self.kind == "linear"
            A = self.filtration("A", local)
            M = self.filtration("M", local)
            B = self.filtration("BF", local)
            mult = self.multiplicity()
            return StructureType(
                m,
                tuple(A.ranks()),
                tuple(M.ranks()),
                tuple(B.ranks()),
                tuple(A.lengths()),
                tuple(M.lengths()),
                tuple(B.lengths()),
                mult,
            )

        return self._memo("type", compute)

    # -- property checks ------------------------------------------------------
    def check_properties(self):
        """Report of the filtration properties that can be decided by ideal arithmetic."""
        rep = Report(f"properties of {self.name or 'Y'}")
        m = self.nilpotency_index()
        local = self.kind == "linear"
        A = self.filtration("A", local)
        M = self.filtration("M", local)
        B = self.filtration("BF", local)
        J = self.localize().structure if local else self.structure
        T = self.structure_type()
        rep.add("m", m)
        rep.add("generic_point" if local else "point", True)
        for name, F in (("A", A), ("M", M), ("BF", B)):
            rep.check(
                f"{name}: descending chain",
                all(F[l + 1].is_subset(F[l]) for l in range(m + 1)),
            )
            rep.check(f"{name}: last member is J", F[m + 1].equals(J))
            rep.check(f"{name}: first member is the unit ideal", F[0].is_unit())
        for l in range(m + 2):
            ok = B[l].is_subset(A[l]) and A[l].is_subset(M[l])
            rep.check(f"chain I^{l}+J <= J_{l} <= I_{l}", ok)
        for l1 in range(m + 1):
            for l2 in range(m + 1 - l1):
                target = A[l1 + l2 + 1]
                rep.check(
                    f"A_{l1} x A_{l2} -> A_{l1 + l2} nonzero",
                    _product_escapes(A[l1], A[l2], target),
                )
                rep.check(
                    f"A_{l1} x M_{l2} -> M_{l1 + l2} nonzero",
                    _product_escapes(A[l1], M[l2], M[l1 + l2 + 1]),
                )
        rep.check(
            "multiplicity = sum of M ranks = sum of A ranks",
            T.multiplicity == sum(T.M_ranks) == sum(T.A_ranks),
            multiplicity=T.multiplicity,
        )
        # Gorenstein-necessary conditions: observations, not requirements
        dual = all(T.A_ranks[l] == T.M_ranks[m - l] for l in range(m + 1))
        rep.check(
            "rank A_l = rank M_(m-l) for all l",
            dual,
            required=False,
            A_ranks=list(T.A_ranks),
            M_ranks_reversed=list(reversed(T.M_ranks)),
        )
        rep.check(
            "A_m and M_m have rank 1",
            T.A_ranks[m] == 1 and T.M_ranks[m] == 1,
            required=False,
        )
        rep.check("A_m = M_m", A[m].equals(M[m]), required=False)
        equal = [A[l].equals(M[l]) for l in range(m + 2)]
        rep.check("A filtration = M filtration", all(equal), required=False, per_index=equal)
        rep.add("type", T)
        return rep

    def summary(self):
        """Report with filtrations, type and property checks."""
        rep = Report(self.name or "multiple structure")
        local = self.kind == "linear"
        rep.add("ring", str(self.ring))
        rep.add("I", self.support)
        rep.add("J", self.structure)
        rep.add("support", self.kind)
        if local:
            model = self.localize()
            rep.add("generic point ring", str(model.ring))
            rep.add("J at generic point", model.structure)
        rep.add("m", self.nilpotency_index())
        rep.add("multiplicity", self.multiplicity())
        for kind in ("M", "A", "BF"):
            rep.add(f"{kind} filtration", list(self.filtration(kind, local).ideals))
        rep.attach(self.check_properties())
        return rep


def _product_escapes(a, b, target):
    """True when some product of generators of ``a`` and ``b`` is outside ``target``."""
    return any(not target.contains(f * g) for f in a.gens for g in b.gens)


def nilpotency_index(s):
    return s.nilpotency_index()


def filtration(s, kind, localized=None):
    return s.filtration(kind, localized)


def localize(s):
    return s.localize()


def multiplicity(s):
    return s.multiplicity()


def structure_type(s):
    return s.structure_type()


def check_properties(s):
    return s.check_properties()
