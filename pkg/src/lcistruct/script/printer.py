"""Pretty-printer; ``parse(pretty(parse(s))) == parse(s)``."""

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

PREC = {"==": 1, "!=": 1, ":": 2, "+": 3, "-": 3, "*": 4, "/": 4, "NEG": 5, "^": 6}
ATOM = 7


def _prec(e):
    if isinstance(e, BinOp):
        return PREC[e.op]
    if isinstance(e, Neg):
        return PREC["NEG"]
    return ATOM


def _wrap(e, need):
    s = expr_str(e)
    return f"({s})" if _prec(e) < need else s


def expr_str(e):
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Str):
        return f'"{e.value}"'
    if isinstance(e, Name):
        return e.id
    if isinstance(e, ListExpr):
        return "[" + ", ".join(expr_str(i) for i in e.items) + "]"
    if isinstance(e, Call):
        parts = [expr_str(a) for a in e.args]
        parts += [f"{k.name}={expr_str(k.value)}" for k in e.kwargs]
        return f"{e.func}(" + ", ".join(parts) + ")"
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, PREC["NEG"])
    if isinstance(e, BinOp):
        p = PREC[e.op]
        if e.op == "^":
            # the base must be an atom; the exponent may be any unary
            return f"{_wrap(e.left, ATOM)}^{_wrap(e.right, PREC['NEG'])}"
        if e.op in ("==", "!="):
            # non-associative
            return f"{_wrap(e.left, p + 1)} {e.op} {_wrap(e.right, p + 1)}"
        sep = ":" if e.op == ":" else e.op
        return f"{_wrap(e.left, p)} {sep} {_wrap(e.right, p + 1)}"
    raise TypeError(f"not an expression: {e!r}")


def stmt_str(s):
    if isinstance(s, RingDecl):
        field = "QQ" + (f"({','.join(s.params)})" if s.params else "")
        out = f"ring {s.name} = {field}[{','.join(s.variables)}]"
        if s.order:
            out += f" order {s.order}"
        return out
    if isinstance(s, Assign):
        return f"{s.target} = {expr_str(s.value)}"
    if isinstance(s, Assert):
        out = f"assert {expr_str(s.test)}"
        if s.message is not None:
            out += f', "{s.message}"'
        return out
    if isinstance(s, ExprStmt):
        return expr_str(s.expr)
    raise TypeError(f"not a statement: {s!r}")


def pretty(script):
    return "".join(stmt_str(s) + ";\n" for s in script.statements)
