"""Structured reports: a JSON tree with stable key order and a text rendering."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import GroebnerBasis, Ideal
from .poly import GREVLEX, Polynomial


def ideal_repr(ideal):
    """Canonical serialization: the reduced grevlex basis, as strings, by
    increasing degree and then decreasing leading monomial."""

    def key(g):
        lm = g.leading_monomial(GREVLEX)
        return (sum(lm), GREVLEX.neg_key(lm))

    return [str(g) for g in sorted(ideal.groebner(GREVLEX), key=key)]


def to_jsonable(value):
    if isinstance(value, Ideal):
        return ideal_repr(value)
    if isinstance(value, GroebnerBasis):
        return [str(g) for g in value]
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, float) and value == float("inf"):
        return "infinite"
    if hasattr(value, "as_dict"):
        return to_jsonable(value.as_dict())
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@dataclass
class Check:
    name: str
    passed: bool
    required: bool = True
    detail: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "required": self.required,
            "detail": to_jsonable(self.detail),
        }


class Report:
    """Ordered sections of computed data plus pass/fail checks.

    Only ``required`` checks decide :attr:`passed`; the others record
    observations whose failure is mathematically meaningful rather than an
    error (for example a Gorenstein-necessary rank duality on a
    non-Gorenstein structure).
    """

    def __init__(self, title=""):
        self.title = title
        self.sections = []
        self.checks = []
        self.children = []

    def add(self, name, value):
        self.sections.append((name, value))
        return value

    def check(self, name, passed, required=True, **detail):
        c = Check(name, bool(passed), required, detail)
        self.checks.append(c)
        return c

    def attach(self, child):
        self.children.append(child)
        return child

    def all_checks(self):
        out = list(self.checks)
        for ch in self.children:
            out.extend(ch.all_checks())
        return out

    @property
    def passed(self):
        return all(c.passed for c in self.all_checks() if c.required)

    def failures(self):
        return [c for c in self.all_checks() if c.required and not c.passed]

    def as_dict(self):
        checks = self.all_checks()
        return {
            "title": self.title,
            "data": [{"name": n, "value": to_jsonable(v)} for n, v in self.sections],
            "checks": [c.as_dict() for c in self.checks],
            "children": [ch.as_dict() for ch in self.children],
            "summary": {
                "passed": self.passed,
                "required_checks": sum(1 for c in checks if c.required),
                "required_failures": sum(1 for c in checks if c.required and not c.passed),
                "observations": sum(1 for c in checks if not c.required),
            },
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self):
        return render_text(self.as_dict())


def _fmt(value):
    if isinstance(value, list) and all(isinstance(v, str) for v in value):
        return "(" + ", ".join(value) + ")"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render_text(tree, depth=0):
    pad = "  " * depth
    lines = []
    if tree.get("title"):
        lines.append(f"{pad}== {tree['title']} ==")
    for item in tree.get("data", []):
        lines.append(f"{pad}{item['name']}: {_fmt(item['value'])}")
    for c in tree.get("checks", []):
        if c["required"]:
            tag = "PASS" if c["passed"] else "FAIL"
        else:
            tag = "holds" if c["passed"] else "fails"
        lines.append(f"{pad}[{tag}] {c['name']}")
    for ch in tree.get("children", []):
        lines.append(render_text(ch, depth + 1).rstrip("\n"))
    if depth == 0:
        s = tree["summary"]
        verdict = "ALL CHECKS PASSED" if s["passed"] else "CHECKS FAILED"
        lines.append(
            f"{verdict}: {s['required_checks'] - s['required_failures']}/"
            f"{s['required_checks']} required checks, {s['observations']} observations"
        )
    return "\n".join(lines) + "\n"
