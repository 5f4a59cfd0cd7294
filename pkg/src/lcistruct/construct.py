"""Local-model runner for the double-line construction of lci multiple
structures of multiplicity ``2n``, coordinate-change certificates,
normal-form recognition, and the worked examples on lines and planes."""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .forms import (
    NO_COMMON_ZERO,
    BinaryForm,
    discriminant,
    hessian,
    nowhere_vanishing,
)
from .groebner import Ideal
from .invariants import (
    TruncationTooSmall,
    artinian_length,
    contains_power_of_maximal,
    hilbert,
    local_min_gens,
    maximal_ideal_power,
)
from .multistruct import MultipleStructure
from .poly import GREVLEX, LEX, QQ, PolyRing, apply_ring_map
from .report import Report

EXTRA_NAMES = ("z", "w", "t", "u")


class ConstructionError(ValueError):
    pass


def extra_variables(codim):
    """Names of the transverse variables: z, w, t, u, then z5, z6, ..."""
    k = codim - 2
    names = list(EXTRA_NAMES[:k])
    names += [f"z{i}" for i in range(len(EXTRA_NAMES) + 1, k + 1)]
    return names


def local_ring(codim):
    return PolyRing(["x", "y"] + extra_variables(codim), QQ, GREVLEX)


@dataclass(frozen=True)
class ConstructionPlan:
    """``branch`` A keeps a quadric ``y^2 + a_2 x^2 + ...`` with ``alphas =
    (a_2, ..., a_(n-1))``; branch B keeps ``xy``. ``r, s`` are the values of
    the last quotient map on ``x^n`` and on ``x^(n-1) y`` (A) or ``y^n`` (B)."""

    n: int
    branch: str = "B"
    alphas: tuple = ()
    codim: int = 2
    r: Fraction = Fraction(1)
    s: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "branch", str(self.branch).upper())
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))

    def validate(self):
        if self.n < 2:
            raise ConstructionError("n must be at least 2")
        if self.codim < 2:
            raise ConstructionError("codimension must be at least 2")
        if self.branch not in ("A", "B"):
            raise ConstructionError(f"unknown branch {self.branch!r}")
        if self.branch == "B":
            if self.alphas and any(self.alphas):
                raise ConstructionError("branch B takes no alpha coefficients")
            if self.r == 0 or self.s == 0:
                raise ConstructionError(
                    "branch B needs r and s invertible: the Hessian r*s*x^(n-2)*y^(n-2) vanishes"
                )
        else:
            if len(self.alphas) > self.n - 2:
                raise ConstructionError(
                    f"branch A with n={self.n} takes at most {self.n - 2} alphas"
                )
            if self.s == 0:
                raise ConstructionError("branch A needs s invertible: the Hessian vanishes mod a_2")

    def alpha(self, i):
        """``a_i`` for ``2 <= i <= n-1``; missing entries are 0."""
        j = i - 2
        return self.alphas[j] if 0 <= j < len(self.alphas) else Fraction(0)

    def as_dict(self):
        return {
            "n": self.n,
            "branch": self.branch,
            "alphas": [str(self.alpha(i)) for i in range(2, self.n)] if self.branch == "A" else [],
            "codim": self.codim,
            "r": str(self.r),
            "s": str(self.s),
        }


@dataclass
class StepCertificate:
    k: int
    ideal: Ideal
    inclusions: bool
    length_drop: int
    expected_drop: int
    next_bundle_rank: int = None
    side_condition: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        ok = self.inclusions and self.length_drop == self.expected_drop
        if self.next_bundle_rank is not None:
            ok = ok and self.next_bundle_rank == 2
        return ok and self.side_condition.get("ok", True)

    def as_dict(self):
        return {
            "step": self.k,
            "ideal": self.ideal,
            "I*I_k <= I_(k+1) <= I_k": self.inclusions,
            "length(I_k/I_(k+1))": self.length_drop,
            "expected": self.expected_drop,
            "rank of next bundle": self.next_bundle_rank,
            "side condition": self.side_condition,
            "notes": self.notes,
        }


@dataclass
class ChainResult:
    plan: ConstructionPlan
    ring: PolyRing
    ideals: list
    certificates: list
    final_form: str
    multiplicity: int
    min_generators: int

    @property
    def final(self):
        return self.ideals[-1]

    @property
    def support(self):
        return self.ideals[0]

    def structure(self):
        return MultipleStructure(self.support, self.final, name=f"construction n={self.plan.n}")

    def report(self, properties=True):
        p = self.plan
        rep = Report(f"construction n={p.n} branch {p.branch} codim {p.codim}")
        rep.add("plan", p)
        rep.add("ring", str(self.ring))
        rep.add("chain", self.ideals)
        rep.add("final form", self.final_form)
        rep.add("steps", self.certificates)
        for c in self.certificates:
            rep.check(f"step {c.k} certified", c.ok)
        rep.check("final ideal matches closed form", self.final.equals(closed_form(p, p.n + 1)))
        rep.check("multiplicity is 2n", self.multiplicity == 2 * p.n, multiplicity=self.multiplicity)
        rep.check(
            "minimal generators equal codimension",
            self.min_generators == p.codim,
            min_generators=self.min_generators,
        )
        if properties:
            s = self.structure()
            t = s.structure_type()
            rep.add("type", t)
            expected = tuple([1] + [2] * (p.n - 1) + [1])
            rep.check("ranks are (1,2,...,2,1)", t.M_ranks == expected == t.A_ranks, ranks=t.M_ranks)
            A, M, B = (s.filtration(k) for k in ("A", "M", "BF"))
            rep.check(
                "A, M and BF filtrations coincide",
                all(A[l].equals(M[l]) and B[l].equals(M[l]) for l in range(len(M))),
            )
            sub = s.check_properties()
            for c in sub.checks:
                c.required = True
            rep.attach(sub)
        return rep


def closed_form(plan, k):
    """``I_k`` of the local chain for ``1 <= k <= n+1``."""
    ring = local_ring(plan.codim)
    x, y = ring.var("x"), ring.var("y")
    rest = [ring.var(v) for v in extra_variables(plan.codim)]
    n = plan.n
    if k == 1:
        gens = [x, y]
    elif k <= n:
        if plan.branch == "A":
            q = y**2 + sum((x**i * plan.alpha(i) for i in range(2, k)), ring.zero)
            gens = [x**k, x ** (k - 1) * y, q]
        else:
            gens = [x**k, x * y, y**k]
    elif k == n + 1:
        if plan.branch == "A":
            q = y**2 + sum((x**i * plan.alpha(i) for i in range(2, n)), ring.zero)
            gens = [x**n, q]
        else:
            gens = [x**n + y**n, x * y]
    else:
        raise ValueError(f"chain index {k} out of range 1..{n + 1}")
    return Ideal(ring, gens + rest)


def _quadric_form(plan):
    # values on x^2, xy, y^2 of the quadric kept in I_3
    if plan.branch == "A":
        values = (plan.alpha(2), 0, 1)
    else:
        values = (0, 1, 0)
    return BinaryForm.from_monomial_values(values, names=("x", "y"))


def last_map_values(plan, a2=None):
    """Values of the last quotient map on ``x^n, x^(n-1)y, ..., y^n``."""
    n = plan.n
    if plan.branch == "B":
        return [plan.r] + [Fraction(0)] * (n - 1) + [plan.s]
    a2 = plan.alpha(2) if a2 is None else a2
    out = []
    for i in range(n + 1):
        p = i // 2
        out.append((-a2) ** p * (plan.r if i % 2 == 0 else plan.s))
    return out


def _step_side_condition(plan, k):
    if k == 2 and plan.n > 2:
        d = discriminant(_quadric_form(plan))
        if plan.branch == "B":
            case = "b"
        else:
            case = "a" if d == 0 else "a'"
        ok = (d != 0) if plan.branch == "B" else True
        return {"kind": "discriminant", "delta": d, "case": case, "ok": ok}
    if k == plan.n:
        form = BinaryForm.from_monomial_values(last_map_values(plan), names=("x", "y"))
        h = hessian(form)
        out = {"kind": "hessian", "hessian": h, "ok": not h.is_zero()}
        if plan.branch == "A":
            h0 = hessian(BinaryForm.from_monomial_values(last_map_values(plan, 0), names=("x", "y")))
            out["hessian at a_2=0"] = h0
            out["ok"] = out["ok"] and not h0.is_zero()
        return out
    return {}


def run_construction(plan):
    plan.validate()
    ring = local_ring(plan.codim)
    n = plan.n
    ideals = [closed_form(plan, k) for k in range(1, n + 2)]
    support = ideals[0]
    lengths = [artinian_length(q) for q in ideals]
    certs = []
    for k in range(1, n + 1):
        cur, nxt = ideals[k - 1], ideals[k]
        prod = support * cur
        incl = prod.is_subset(nxt) and nxt.is_subset(cur)
        expected = 2 if k < n else 1
        cert = StepCertificate(k, nxt, incl, lengths[k] - lengths[k - 1], expected)
        if 2 <= k <= n - 1:
            cert.next_bundle_rank = artinian_length(support * nxt) - artinian_length(prod)
        cert.side_condition = _step_side_condition(plan, k)
        certs.append(cert)
    final = ideals[-1]
    if plan.branch == "A":
        form = "(x^n, y^2 + a_2 x^2 + ... + a_(n-1) x^(n-1), z, ..., u)"
    else:
        form = "(x^n + y^n, xy, z, ..., u)"
    mult = lengths[-1]
    mg = local_min_gens(final)
    return ChainResult(plan, ring, ideals, certs, form, mult, mg)


# -- coordinate changes --------------------------------------------------------


def _jacobian_at_origin(phi, src, dst):
    rows = []
    for v in src.variables:
        img = phi.get(v, dst.var(v) if v in dst.variables else None)
        if img is None:
            raise ValueError(f"no image for {v}")
        row = []
        for w in dst.variables:
            e = tuple(1 if u == w else 0 for u in dst.variables)
            row.append(Fraction(img.coefficient(e)) if not isinstance(img, (int, Fraction)) else Fraction(0))
        rows.append(row)
    return rows


def _rank(rows):
    from .kernels import sparse_rank

    return sparse_rank([{j: c for j, c in enumerate(r) if c} for r in rows])


def _is_identity(phi, src, dst):
    if src != dst:
        return False
    return all(phi.get(v, dst.var(v)) == dst.var(v) for v in src.variables)


def verify_coordinate_change(src, dst, phi, n):
    """True iff ``phi(src) + m^n`` and ``dst + m^n`` agree, for ``m`` the
    maximal ideal at the origin of ``dst.ring``.

    Both ideals must contain ``m^k`` for some ``k <= n``; otherwise the
    truncation says nothing about the local ideals and TruncationTooSmall
    reports the smallest sufficient degree.
    """
    sr, dr = src.ring, dst.ring
    phi = {k: (v if not isinstance(v, str) else dr.parse(v)) for k, v in phi.items()}
    phi = {k: (v if hasattr(v, "terms") else dr.const(v)) for k, v in phi.items()}
    if _is_identity(phi, sr, dr):
        return src.equals(dst)
    jac = _jacobian_at_origin(phi, sr, dr)
    if len(sr.variables) != len(dr.variables) or _rank(jac) != len(dr.variables):
        raise ValueError("the map is not a local change of coordinates at the origin")
    for img in phi.values():
        if img.coefficient((0,) * dr.nvars):
            raise ValueError("the map does not fix the origin")
    need = _common_power(src, dst, n)
    if need is None:
        req = _common_power(src, dst, 4 * n + 8)
        raise TruncationTooSmall(
            f"truncation degree {n} too small; need N >= {req}" if req else
            "the ideals are not primary to the origin",
            required=req,
        )
    mn = maximal_ideal_power(dr, dr.variables, n)
    image = Ideal(dr, [apply_ring_map(phi, g, dr) for g in src.gens]) + mn
    return image.equals(dst + mn)


def _common_power(src, dst, cap):
    for k in range(1, cap + 1):
        if contains_power_of_maximal(src, k) and contains_power_of_maximal(dst, k):
            return k
    return None


def step3_change(lam, mu):
    """Source, target and map for the step producing ``(X^4, Y^4, XY)``."""
    s = PolyRing(["x", "y"])
    t = PolyRing(["X", "Y"])
    x, y = s.gens
    X, Y = t.gens
    src = Ideal(s, [x**4, y**4, x * y - x**3 * lam - y**3 * mu])
    dst = Ideal(t, [X**4, Y**4, X * Y])
    phi = {"x": X + Y**2 * mu, "y": Y + X**2 * lam}
    return src, dst, phi


def stepk_change(k, lam, mu):
    """Source, target and composite map for step ``k``: ``y = Y + lam x^(k-1)``
    followed by ``x = X + mu Y^(k-1)``."""
    s = PolyRing(["x", "y"])
    t = PolyRing(["X", "Y"])
    x, y = s.gens
    X, Y = t.gens
    src = Ideal(
        s,
        [x ** (k + 1), x * y - x**k * lam - y**k * mu, y ** (k + 1), x**2 * y, x * y**2],
    )
    dst = Ideal(t, [X ** (k + 1), X * Y, Y ** (k + 1)])
    xi = X + Y ** (k - 1) * mu
    phi = {"x": xi, "y": Y + xi ** (k - 1) * lam}
    return src, dst, phi


# -- normal forms --------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    kind: str
    n: int = None
    alphas: tuple = ()
    change: tuple = None
    variables: tuple = ()
    scale: Fraction = None

    def as_dict(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "alphas": [str(a) for a in self.alphas],
            "change": self.change,
            "variables": list(self.variables),
            "scale": None if self.scale is None else str(self.scale),
        }


OTHER = NormalForm("other")


def _linear_parts(ideal):
    ring = ideal.ring
    rows = []
    for g in ideal.groebner(GREVLEX):
        row = {}
        for i in range(ring.nvars):
            e = tuple(1 if j == i else 0 for j in range(ring.nvars))
            c = g.coefficient(e)
            if c:
                row[i] = Fraction(c)
        if row:
            rows.append(row)
    return rows


def _pivots(rows, n):
    rows = [dict(r) for r in rows]
    pivots = []
    for col in range(n):
        idx = next((i for i, r in enumerate(rows) if r.get(col)), None)
        if idx is None:
            continue
        p = rows.pop(idx)
        pivots.append(col)
        for r in rows:
            c = r.get(col)
            if c:
                k = c / p[col]
                for j, v in p.items():
                    r[j] = r.get(j, 0) - k * v
                    if not r[j]:
                        del r[j]
    return pivots


def _plane_model(ideal):
    ring = ideal.ring
    piv = _pivots(_linear_parts(ideal), ring.nvars)
    free = [v for i, v in enumerate(ring.variables) if i not in piv]
    if len(free) != 2:
        return None
    elim = ideal.eliminate([ring.variables[i] for i in piv]) if piv else ideal
    plane = PolyRing(free, ring.domain, GREVLEX)
    return Ideal(plane, [g.to_ring(plane) for g in elim.gens])


def _candidate_changes():
    yield (1, 0, 0, 1)
    yield (0, 1, 1, 0)
    for m in itertools.product((1, 0, -1), repeat=4):
        a, b, c, d = m
        if a * d - b * c and m not in ((1, 0, 0, 1), (0, 1, 1, 0)):
            yield m


def _apply_linear(ideal, m):
    ring = ideal.ring
    X, Y = ring.gens
    a, b, c, d = m
    phi = {ring.variables[0]: X * a + Y * b, ring.variables[1]: X * c + Y * d}
    return Ideal(ring, [apply_ring_map(phi, g, ring) for g in ideal.gens])


def _type_a(plane):
    xn, yn = plane.ring.variables
    lex = PolyRing((yn, xn), plane.ring.domain, LEX)
    gb = list(Ideal(lex, [g.to_ring(lex) for g in plane.gens]).groebner(LEX))
    if len(gb) != 2:
        return None
    pure = [g for g in gb if len(g.terms) == 1 and g.leading_monomial(LEX)[0] == 0]
    quad = [g for g in gb if g.leading_monomial(LEX) == (2, 0)]
    if len(pure) != 1 or len(quad) != 1:
        return None
    (e,) = pure[0].terms
    if e[1] < 2:
        return None
    n = e[1]
    alphas = [Fraction(0)] * (n - 2)
    for (ey, ex), c in quad[0].terms.items():
        if (ey, ex) == (2, 0):
            continue
        if ey != 0 or not 2 <= ex <= n - 1:
            return None
        alphas[ex - 2] = Fraction(c)
    return n, tuple(alphas)


def _type_b(plane, length):
    ring = plane.ring
    X, Y = ring.gens
    if length % 2 or not plane.contains(X * Y):
        return None
    n = length // 2
    nf = plane.normal_form(X**n, GREVLEX)
    e = (0, n)
    if len(nf.terms) != 1 or e not in nf.terms:
        return None
    return n, -Fraction(nf.terms[e])


def recognize_normal_form(ideal):
    """Match an ideal primary to the origin against ``(x^n, y^2 + sum a_i x^i, ...)``
    and ``(x^n + c y^n, xy, ...)`` up to a small linear change of the free pair."""
    ring = ideal.ring
    if ideal.is_unit():
        return OTHER
    length = artinian_length(ideal)
    if length == math.inf:
        return OTHER
    try:
        if local_min_gens(ideal) != ring.nvars:
            return OTHER
    except TruncationTooSmall:
        return OTHER
    plane = _plane_model(ideal)
    if plane is None or artinian_length(plane) != length:
        return OTHER
    for m in _candidate_changes():
        moved = plane if m == (1, 0, 0, 1) else _apply_linear(plane, m)
        a = _type_a(moved)
        if a is not None and 2 * a[0] == length:
            return NormalForm("A", a[0], a[1], m, plane.ring.variables)
        b = _type_b(moved, length)
        if b is not None:
            return NormalForm("B", b[0], (), m, plane.ring.variables, b[1])
    return OTHER


# -- worked examples -------------------------------------------------------------


def example4_ring():
    return PolyRing(["x", "y", "u", "v"])


def example4_ideals(n):
    """Outcomes of the construction on a line in P^3 for ``n = 2, 3``."""
    R = example4_ring()
    if n == 2:
        return [Ideal(R, [R("x^2"), R("y^2")])]
    if n == 3:
        return [Ideal(R, [R("x^2"), R("y^3")]), Ideal(R, [R("x*y"), R("x^3 + y^3")])]
    raise ValueError("the line example covers n = 2 and n = 3")


def example4_report():
    R = example4_ring()
    I = Ideal(R, [R("x"), R("y")])
    rep = Report("line in P^3")
    expected = {2: (4, "4t"), 3: (6, "6t - 3")}
    for n in (2, 3):
        for J in example4_ideals(n):
            sub = Report(f"n={n}: J = {J}")
            S = MultipleStructure(I, J, name=str(J))
            h = hilbert(J)
            t = S.structure_type()
            sub.add("hilbert", h)
            sub.add("type", t)
            deg, poly = expected[n]
            sub.check("Hilbert degree", h.degree == deg, degree=h.degree)
            sub.check("Hilbert polynomial", h.polynomial_str() == poly, polynomial=h.polynomial_str())
            sub.check("multiplicity is 2n", t.multiplicity == 2 * n)
            sub.check(
                "M ranks (1,2,...,2,1)",
                t.M_ranks == tuple([1] + [2] * (n - 1) + [1]),
                ranks=t.M_ranks,
            )
            sub.attach(S.check_properties())
            rep.attach(sub)
    return rep


def example5_ring():
    return PolyRing(["x", "y", "z", "u", "v"])


def example5(r=0):
    """Double structure of codimension 3 on a line in P^4."""
    R = example5_ring()
    a, b = R(f"u^{r + 1}"), R(f"v^{r + 1}")
    x, y, z = R("x"), R("y"), R("z")
    I = Ideal(R, [x, y, z])
    I2 = Ideal(R, [a * x + b * y, x**2, x * y, x * z, y * z, y**2, z**2])
    J = Ideal(R, [a * x + b * y, x**2, x * y, y**2, z**2])
    return I, I2, J, (a, b)


def example5_report(r=0):
    R = example5_ring()
    I, I2, J, (a, b) = example5(r)
    S = MultipleStructure(I, J, name=f"line in P^4, r={r}")
    rep = Report(f"line in P^4, r={r}")
    rep.add("I_2", I2)
    rep.add("I_3", J)
    rep.check("a, b have no common zero", nowhere_vanishing([a, b], NO_COMMON_ZERO))
    rep.check("I*I_2 <= I_3 <= I_2", (I * I2).is_subset(J) and J.is_subset(I2))
    mult = S.multiplicity()
    rep.check("multiplicity 4", mult == 4, multiplicity=mult)
    m = Ideal(R, R.gens)
    rep.check("saturated with respect to the irrelevant ideal", J.saturate(m).equals(J))
    model = S.localize()
    generic = local_min_gens(model.structure)
    rep.check("lci at the generic point", generic == 3, min_generators=generic)
    for pt in ({"u": 0, "v": 1}, {"u": 1, "v": 0}):
        k = local_min_gens(J, pt, ["x", "y", "z"])
        label = ",".join(f"{p}={q}" for p, q in pt.items())
        rep.check(f"lci at {label}", k == 3, min_generators=k)
    rep.add("type", S.structure_type())
    rep.attach(S.check_properties())
    return rep


def example6_ring():
    return PolyRing(["x", "y", "z", "t", "u", "v", "w"])


def example6(r=0):
    """Double structure of codimension 4 on a plane in P^6."""
    R = example6_ring()
    a, b, c = R(f"u^{r + 1}"), R(f"v^{r + 1}"), R(f"w^{r + 1}")
    x, y, z, t = R("x"), R("y"), R("z"), R("t")
    m3 = Ideal(R, [x, y, z])
    J = Ideal(R, [b * x - a * y, c * y - b * z, a * z - c * x]) + m3**2 + Ideal(R, [t**2])
    I = Ideal(R, [x, y, z, t])
    return I, J, (a, b, c)


def example6_report(r=0):
    I, J, forms = example6(r)
    S = MultipleStructure(I, J, name=f"plane in P^6, r={r}")
    rep = Report(f"plane in P^6, r={r}")
    rep.add("J", J)
    rep.check("a, b, c have no common zero", nowhere_vanishing(list(forms), NO_COMMON_ZERO))
    t = S.structure_type()
    rep.add("type", t)
    rep.check("multiplicity 4", t.multiplicity == 4, multiplicity=t.multiplicity)
    rep.check("m = 2", t.m == 2, m=t.m)
    rep.check("M ranks (1,2,1)", t.M_ranks == (1, 2, 1), ranks=t.M_ranks)
    generic = local_min_gens(S.localize().structure)
    rep.check("lci at the generic point", generic == 4, min_generators=generic)
    for pt in ({"u": 0, "v": 1, "w": 1}, {"u": 1, "v": 0, "w": 1}, {"u": 1, "v": 1, "w": 0}):
        k = local_min_gens(J, pt, ["x", "y", "z", "t"])
        label = ",".join(f"{p}={q}" for p, q in pt.items())
        rep.check(f"lci at {label}", k == 4, min_generators=k)
    rep.attach(S.check_properties())
    return rep


def paper_examples(r_values=(0, 1)):
    """Certification report for the line and plane examples."""
    rep = Report("worked examples")
    rep.attach(example4_report())
    for r in r_values:
        rep.attach(example5_report(r))
    for r in r_values:
        rep.attach(example6_report(r))
    return rep
