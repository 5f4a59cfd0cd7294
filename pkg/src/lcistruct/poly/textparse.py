"""Reader for the polynomial text syntax.

Identifiers are variables (or coefficient parameters), ``^`` or ``**`` raise
to a nonnegative integer power, ``*`` may be omitted between factors, and
rationals are written ``p/q``.
"""

import re
from fractions import Fraction

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


class PolynomialSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at column {pos + 1}: {text!r}")
        self.pos = pos


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolynomialSyntaxError("unexpected character", text, pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_polynomial(ring, text):
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        t = toks[i]
        i += 1
        return t

    def expect(value):
        t = take()
        if t[1] != value:
            raise PolynomialSyntaxError(f"expected {value!r}", text, t[2])

    def expr():
        acc = term()
        while peek()[1] in ("+", "-") and peek()[0] == "op":
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = unary()
        while True:
            t = peek()
            if t[0] == "op" and t[1] in ("*", "/"):
                take()
                rhs = unary()
                acc = acc * rhs if t[1] == "*" else acc / rhs
            elif t[0] in ("num", "name") or t[1] == "(":
                acc = acc * unary()
            else:
                return acc

    def unary():
        t = peek()
        if t[0] == "op" and t[1] in ("-", "+"):
            take()
            v = unary()
            return -v if t[1] == "-" else v
        return power()

    def power():
        base = atom()
        t = peek()
        if t[0] == "op" and t[1] in ("^", "**"):
            take()
            e = take()
            if e[0] != "num" or not e[1].isdigit():
                raise PolynomialSyntaxError("exponent must be a nonnegative integer", text, e[2])
            return base ** int(e[1])
        return base

    def atom():
        t = take()
        if t[0] == "num":
            return ring.const(Fraction(t[1]))
        if t[0] == "name":
            if t[1] in ring.variables:
                return ring.var(t[1])
            if t[1] in ring.domain.params:
                return ring.const(ring.domain.param(t[1]))
            raise PolynomialSyntaxError(f"unknown identifier {t[1]!r}", text, t[2])
        if t[1] == "(":
            v = expr()
            expect(")")
            return v
        raise PolynomialSyntaxError("unexpected token", text, t[2])

    if toks[0][0] == "end":
        raise PolynomialSyntaxError("empty expression", text, 0)
    result = expr()
    if peek()[0] != "end":
        raise PolynomialSyntaxError("unexpected trailing input", text, peek()[2])
    return result
