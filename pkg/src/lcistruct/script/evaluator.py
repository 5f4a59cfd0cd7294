"""Static checks and evaluation of parsed scripts."""

from dataclasses import dataclass, field
from fractions import Fraction

from ..construct import (
    ChainResult,
    ConstructionError,
    ConstructionPlan,
    paper_examples,
    recognize_normal_form,
    run_construction,
)
from ..groebner import GroebnerBasis, Ideal
from ..invariants import (
    INFINITE,
    TruncationTooSmall,
    artinian_length,
    hilbert,
    krull_dimension,
    local_min_gens,
)
from ..multistruct import InvalidStructure, MultipleStructure
from ..poly import QQ, FractionField, MonomialOrder, PolyRing, Polynomial, RingMismatch, divexact
from ..poly.gcd import InexactDivision
from ..report import Report
from .errors import ScriptNameError, ScriptRuntimeError
from .nodes import (
    Assert,
    Assign,
    BinOp,
    Call,
    ExprStmt,
    ListExpr,
    Name,
    Neg,
    Num,
    RingDecl,
    Str,
)
from .parser import parse
from .printer import expr_str, stmt_str


@dataclass
class Config:
    order: str = None
    trunc: int = None
    chart: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Symbol:
    """Bare word passed where a function expects a keyword-like choice."""

    name: str

    def __str__(self):
        return self.name


# name -> (positional argument indices, keyword names) that take bare words
SYMBOL_ARGS = {
    "construct": ((), ("case", "branch")),
    "examples": ((0,), ()),
    "gb": ((1,), ("order",)),
    "filtration": ((1,), ()),
}

FUNCTIONS = (
    "ideal",
    "gb",
    "nf",
    "member",
    "sat",
    "intersect",
    "eliminate",
    "hilbert",
    "length",
    "dim",
    "degree",
    "equal",
    "mingens",
    "multstruct",
    "filtrations",
    "filtration",
    "type",
    "nilpotency",
    "multiplicity",
    "check",
    "construct",
    "recognize",
    "examples",
)


class _Scope:
    def __init__(self):
        self.names = set()
        self.ring_names = set()
        self.ring_symbols = set()


def check_script(script, source=None):
    """Reject references to names that are not defined at their point of use."""
    scope = _Scope()

    def err(msg, pos):
        return ScriptNameError(msg, pos[0], pos[1], source)

    def walk(e, call=None, slot=None):
        if isinstance(e, Name):
            if call in SYMBOL_ARGS:
                pos_ok, kw_ok = SYMBOL_ARGS[call]
                if slot in pos_ok or slot in kw_ok:
                    return
            if e.id not in scope.names and e.id not in scope.ring_symbols and e.id not in scope.ring_names:
                raise err(f"unknown identifier {e.id!r}", e.pos)
        elif isinstance(e, Call):
            if e.func not in FUNCTIONS:
                raise err(f"unknown function {e.func!r}", e.pos)
            for i, a in enumerate(e.args):
                walk(a, e.func, i)
            for k in e.kwargs:
                if e.func in ("mingens", "multstruct") and isinstance(k.value, (Num, Neg)):
                    if k.name not in scope.ring_symbols:
                        raise err(f"{k.name!r} is not a ring variable", k.pos)
                walk(k.value, e.func, k.name)
        elif isinstance(e, BinOp):
            walk(e.left)
            walk(e.right)
        elif isinstance(e, Neg):
            walk(e.operand)
        elif isinstance(e, ListExpr):
            for i in e.items:
                walk(i, call, slot)

    for s in script.statements:
        if isinstance(s, RingDecl):
            names = list(s.params) + list(s.variables)
            if len(set(names)) != len(names):
                raise err("repeated name in ring declaration", s.pos)
            scope.ring_symbols = set(names)
            scope.ring_names.add(s.name)
            if s.order:
                try:
                    MonomialOrder.parse(s.order)
                except ValueError as exc:
                    raise err(str(exc), s.pos) from None
        elif isinstance(s, Assign):
            walk(s.value)
            if s.target in scope.ring_symbols:
                raise err(f"cannot assign to ring variable {s.target!r}", s.pos)
            scope.names.add(s.target)
        elif isinstance(s, Assert):
            walk(s.test)
        elif isinstance(s, ExprStmt):
            walk(s.expr)
    return script


def _is_number(v):
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


class Evaluator:
    def __init__(self, config=None, source=None):
        self.config = config or Config()
        self.source = source
        self.env = {}
        self.rings = {}
        self.ring = None
        self.report = Report("script")
        self._stmt = None

    # -- errors ---------------------------------------------------------
    def fail(self, message, node=None):
        pos = getattr(node, "pos", None) or getattr(self._stmt, "pos", (None, None))
        stmt = stmt_str(self._stmt) if self._stmt is not None else None
        msg = message if stmt is None else f"{message} (in statement: {stmt})"
        return ScriptRuntimeError(msg, pos[0], pos[1], self.source)

    # -- statements -------------------------------------------------------
    def run(self, script):
        for s in script.statements:
            self._stmt = s
            try:
                self.statement(s)
            except ScriptRuntimeError:
                raise
            except (
                ValueError,
                TypeError,
                ZeroDivisionError,
                KeyError,
                RingMismatch,
                InexactDivision,
            ) as exc:
                raise self.fail(str(exc).strip("'\"")) from exc
        self._stmt = None
        return self.report

    def statement(self, s):
        if isinstance(s, RingDecl):
            domain = FractionField(s.params) if s.params else QQ
            order = s.order or self.config.order or "grevlex"
            ring = PolyRing(s.variables, domain, MonomialOrder.parse(order))
            self.rings[s.name] = ring
            self.env[s.name] = ring
            self.ring = ring
            self.report.add(s.name, str(ring))
        elif isinstance(s, Assign):
            v = self.eval(s.value)
            self.env[s.target] = v
            self._record(s.target, v)
        elif isinstance(s, Assert):
            v = self.eval(s.test)
            if not isinstance(v, bool):
                raise self.fail(f"assert needs a true/false value, got {_kind(v)}", s.test)
            self.report.check(s.message or expr_str(s.test), v)
        elif isinstance(s, ExprStmt):
            v = self.eval(s.expr)
            self._record(expr_str(s.expr), v)

    def _record(self, label, v):
        if isinstance(v, Report):
            self.report.attach(v)
        elif isinstance(v, ChainResult):
            self.report.attach(v.report())
        elif isinstance(v, MultipleStructure):
            self.report.add(label, {"I": v.support, "J": v.structure, "support": v.kind})
        elif isinstance(v, PolyRing):
            self.report.add(label, str(v))
        else:
            self.report.add(label, v)

    # -- expressions ----------------------------------------------------
    def eval(self, e):
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Str):
            return e.value
        if isinstance(e, Name):
            return self.lookup(e)
        if isinstance(e, ListExpr):
            return [self.eval(i) for i in e.items]
        if isinstance(e, Neg):
            v = self.eval(e.operand)
            if _is_number(v) or isinstance(v, Polynomial):
                return -v
            raise self.fail(f"cannot negate {_kind(v)}", e)
        if isinstance(e, BinOp):
            return self.binop(e)
        if isinstance(e, Call):
            return self.call(e)
        raise self.fail(f"cannot evaluate {e!r}", e)

    def lookup(self, e):
        if e.id in self.env:
            return self.env[e.id]
        ring = self.ring
        if ring is not None:
            if e.id in ring.variables:
                return ring.var(e.id)
            if e.id in ring.domain.params:
                return ring.const(ring.domain.param(e.id))
        raise self.fail(f"unknown identifier {e.id!r}", e)

    def _poly(self, v, node):
        if isinstance(v, Polynomial):
            return v
        if _is_number(v):
            if self.ring is None:
                raise self.fail("no ring declared", node)
            return self.ring.const(v)
        raise self.fail(f"expected a polynomial, got {_kind(v)}", node)

    def _ideal(self, v, node):
        if isinstance(v, Ideal):
            return v
        if isinstance(v, Polynomial):
            return Ideal(v.ring, [v])
        if isinstance(v, GroebnerBasis):
            return Ideal(v.ring, v.elements)
        raise self.fail(f"expected an ideal, got {_kind(v)}", node)

    def binop(self, e):
        a, b = self.eval(e.left), self.eval(e.right)
        op = e.op
        if op in ("==", "!="):
            eq = self._equal(a, b, e)
            return eq if op == "==" else not eq
        if op == ":":
            I = self._ideal(a, e.left)
            if isinstance(b, Polynomial):
                return I.quotient_by(b)
            return I.colon(self._ideal(b, e.right))
        if isinstance(a, Ideal) or isinstance(b, Ideal):
            if op == "+":
                return self._ideal(a, e.left) + self._ideal(b, e.right)
            if op == "*":
                if isinstance(a, Ideal) and isinstance(b, Ideal):
                    return a * b
                I, f = (a, b) if isinstance(a, Ideal) else (b, a)
                return I * self._poly(f, e)
            if op == "^" and isinstance(a, Ideal) and _is_number(b) and int(b) == b and b >= 0:
                return a ** int(b)
            raise self.fail(f"unsupported operation {op!r} on ideals", e)
        if _is_number(a) and _is_number(b):
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0:
                    raise self.fail("division by zero", e)
                q = Fraction(a) / b
                return q.numerator if q.denominator == 1 else q
            if op == "^":
                if b < 0 and a == 0:
                    raise self.fail("division by zero", e)
                if int(b) != b:
                    raise self.fail("exponent must be an integer", e.right)
                q = Fraction(a) ** int(b)
                return q.numerator if q.denominator == 1 else q
        if isinstance(a, Polynomial) or isinstance(b, Polynomial):
            if op == "^":
                if not (_is_number(b) and int(b) == b and b >= 0):
                    raise self.fail("exponent must be a nonnegative integer", e.right)
                return self._poly(a, e.left) ** int(b)
            if op == "/":
                if _is_number(b):
                    if b == 0:
                        raise self.fail("division by zero", e)
                    return self._poly(a, e.left) * (Fraction(1) / b)
                return divexact(self._poly(a, e.left), self._poly(b, e.right))
            pa, pb = self._poly(a, e.left), self._poly(b, e.right)
            if op == "+":
                return pa + pb
            if op == "-":
                return pa - pb
            if op == "*":
                return pa * pb
        raise self.fail(f"unsupported operation {op!r} on {_kind(a)} and {_kind(b)}", e)

    def _equal(self, a, b, e):
        if isinstance(a, Ideal) or isinstance(b, Ideal):
            return self._ideal(a, e.left).equals(self._ideal(b, e.right))
        if isinstance(a, Polynomial) or isinstance(b, Polynomial):
            return self._poly(a, e.left) == self._poly(b, e.right)
        return _jsonish(a) == _jsonish(b)

    # -- function calls ----------------------------------------------------
    def _symbol_or_eval(self, e, call, slot):
        pos_ok, kw_ok = SYMBOL_ARGS.get(call, ((), ()))
        if isinstance(e, Name) and (slot in pos_ok or slot in kw_ok):
            if e.id not in self.env:
                return Symbol(e.id)
        return self.eval(e)

    def call(self, e):
        fn = getattr(self, f"fn_{e.func}", None)
        if fn is None:
            raise self.fail(f"unknown function {e.func!r}", e)
        args = [self._symbol_or_eval(a, e.func, i) for i, a in enumerate(e.args)]
        kwargs = {k.name: self._symbol_or_eval(k.value, e.func, k.name) for k in e.kwargs}
        try:
            return fn(e, *args, **kwargs)
        except TypeError as exc:
            if "positional argument" in str(exc) or "keyword argument" in str(exc):
                raise self.fail(f"bad arguments to {e.func}(): {exc}", e) from None
            raise

    def _arg_ideal(self, e, v, i=0):
        node = e.args[i] if i < len(e.args) else e
        return self._ideal(v, node)

    def fn_ideal(self, e, *gens):
        flat = []
        for g in gens:
            flat.extend(g if isinstance(g, list) else [g])
        if self.ring is None and not any(isinstance(g, Polynomial) for g in flat):
            raise self.fail("ideal() needs a declared ring", e)
        ring = next((g.ring for g in flat if isinstance(g, Polynomial)), self.ring)
        return Ideal(ring, [self._poly(g, e) for g in flat])

    def fn_gb(self, e, I, order=None):
        I = self._arg_ideal(e, I)
        o = MonomialOrder.parse(str(order)) if order is not None else I.ring.order
        return I.groebner(o)

    def fn_nf(self, e, f, I):
        I = self._arg_ideal(e, I, 1)
        return I.normal_form(self._poly(f, e.args[0]))

    def fn_member(self, e, f, I):
        return self._arg_ideal(e, I, 1).contains(self._poly(f, e.args[0]))

    def fn_sat(self, e, I, K):
        return self._arg_ideal(e, I).saturate(self._arg_ideal(e, K, 1))

    def fn_intersect(self, e, *ideals):
        if not ideals:
            raise self.fail("intersect() needs at least one ideal", e)
        out = self._arg_ideal(e, ideals[0])
        for i, K in enumerate(ideals[1:], 1):
            out = out.intersect(self._arg_ideal(e, K, i))
        return out

    def fn_eliminate(self, e, I, names):
        I = self._arg_ideal(e, I)
        names = names if isinstance(names, list) else [names]
        out = []
        for v in names:
            if isinstance(v, Polynomial) and len(v.terms) == 1 and v.degree() == 1:
                out.extend(v.used_variables())
            else:
                raise self.fail("eliminate() takes a list of ring variables", e.args[1])
        return I.eliminate(out)

    def fn_hilbert(self, e, I):
        return hilbert(self._arg_ideal(e, I))

    def fn_length(self, e, I):
        return artinian_length(self._arg_ideal(e, I))

    def fn_dim(self, e, I):
        return krull_dimension(self._arg_ideal(e, I))

    def fn_degree(self, e, I):
        return hilbert(self._arg_ideal(e, I)).degree

    def fn_equal(self, e, I, K):
        return self._arg_ideal(e, I).equals(self._arg_ideal(e, K, 1))

    def fn_mingens(self, e, I, **point):
        I = self._arg_ideal(e, I)
        point = {k: v for k, v in point.items()}
        try:
            return local_min_gens(I, point, n=self.config.trunc)
        except TruncationTooSmall as exc:
            raise self.fail(str(exc), e) from None

    def fn_multstruct(self, e, I, J, **chart):
        chart = dict(chart) or dict(self.config.chart)
        try:
            return MultipleStructure(
                self._arg_ideal(e, I), self._arg_ideal(e, J, 1), chart=chart or None
            )
        except InvalidStructure as exc:
            raise self.fail(str(exc), e) from None

    def _structure(self, e, S):
        if not isinstance(S, MultipleStructure):
            raise self.fail(f"expected a multiple structure, got {_kind(S)}", e)
        return S

    def fn_filtrations(self, e, S):
        S = self._structure(e, S)
        return {k: list(S.filtration(k).ideals) for k in ("M", "A", "BF")}

    def fn_filtration(self, e, S, kind):
        S = self._structure(e, S)
        return list(S.filtration(str(kind)).ideals)

    def fn_type(self, e, S):
        return self._structure(e, S).structure_type()

    def fn_nilpotency(self, e, S):
        return self._structure(e, S).nilpotency_index()

    def fn_multiplicity(self, e, S):
        return self._structure(e, S).multiplicity()

    def fn_check(self, e, S):
        return self._structure(e, S).check_properties()

    def fn_construct(self, e, n, case=None, branch=None, alphas=(), codim=2, r=1, s=1):
        br = str(case or branch or "B")
        try:
            plan = ConstructionPlan(int(n), br, tuple(alphas), int(codim), r, s)
            return run_construction(plan)
        except ConstructionError as exc:
            raise self.fail(str(exc), e) from None

    def fn_recognize(self, e, I):
        return recognize_normal_form(self._arg_ideal(e, I))

    def fn_examples(self, e, which=Symbol("paper")):
        if str(which) != "paper":
            raise self.fail(f"unknown example set {which}", e)
        return paper_examples()


def _kind(v):
    if isinstance(v, bool):
        return "boolean"
    if _is_number(v):
        return "number"
    return type(v).__name__


def _jsonish(v):
    from ..report import to_jsonable

    return to_jsonable(v)


def execute(script, config=None, source=None):
    """Evaluate a parsed script and return its report."""
    return Evaluator(config, source).run(script)


def run_source(source, config=None):
    """Parse, check and evaluate script text."""
    script = parse(source)
    check_script(script, source)
    return execute(script, config, source)
