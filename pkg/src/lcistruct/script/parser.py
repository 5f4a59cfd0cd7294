"""Recursive-descent parser.

Grammar::

    script     := (stmt? (";" | NEWLINE))* stmt? EOF
    stmt       := ring_decl | "assert" expr ("," STRING)? | NAME "=" expr | expr
    ring_decl  := "ring" NAME "=" "QQ" ("(" names ")")? "[" names "]" ("order" order)?
    order      := NAME ("(" NUMBER ")")?
    expr       := colon (("==" | "!=") colon)?
    colon      := sum (":" sum)*
    sum        := product (("+" | "-") product)*
    product    := unary (("*" | "/") unary)*
    unary      := "-" unary | power
    power      := atom ("^" unary)?
    atom       := NUMBER | STRING | NAME | NAME "(" args ")" | "[" items "]" | "(" expr ")"
    args       := (arg ("," arg)*)?     arg := NAME "=" expr | expr
"""

from .errors import ScriptSyntaxError
from .lexer import tokenize
from .nodes import (
    Assert,
    Assign,
    BinOp,
    Call,
    ExprStmt,
    Keyword,
    ListExpr,
    Name,
    Neg,
    Num,
    RingDecl,
    Script,
    Str,
)


class Parser:
    def __init__(self, source):
        self.source = source
        self.tokens = tokenize(source)
        self.i = 0

    # -- token helpers -----------------------------------------------------
    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, k=1):
        j = min(self.i + k, len(self.tokens) - 1)
        return self.tokens[j]

    def at(self, kind, text=None):
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def at_op(self, *ops):
        return self.tok.kind == "OP" and self.tok.text in ops

    def advance(self):
        t = self.tok
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ScriptSyntaxError(message, tok.line, tok.col, self.source)

    def describe(self, tok):
        if tok.kind == "EOF":
            return "end of input"
        if tok.kind == "NEWLINE":
            return "end of line"
        return repr(tok.text)

    def expect(self, kind, text=None):
        if not self.at(kind, text):
            want = text or kind.lower()
            raise self.error(f"expected {want!r}, found {self.describe(self.tok)}")
        return self.advance()

    def expect_op(self, text):
        return self.expect("OP", text)

    # -- statements --------------------------------------------------------------
    def parse_script(self):
        stmts = []
        while True:
            while self.at("NEWLINE") or self.at_op(";"):
                self.advance()
            if self.at("EOF"):
                break
            stmts.append(self.statement())
            if not (self.at("NEWLINE") or self.at_op(";") or self.at("EOF")):
                raise self.error(f"unexpected {self.describe(self.tok)} after statement")
        return Script(tuple(stmts))

    def statement(self):
        t = self.tok
        pos = (t.line, t.col)
        if self.at("KEYWORD", "ring"):
            return self.ring_decl()
        if self.at("KEYWORD", "assert"):
            self.advance()
            test = self.expr()
            message = None
            if self.at_op(","):
                self.advance()
                message = self.expect("STRING").text
            return Assert(test, message, pos=pos)
        if t.kind == "NAME" and self.peek().kind == "OP" and self.peek().text == "=":
            self.advance()
            self.advance()
            return Assign(t.text, self.expr(), pos=pos)
        return ExprStmt(self.expr(), pos=pos)

    def names(self, close):
        out = []
        if self.at_op(close):
            return out
        while True:
            out.append(self.expect("NAME").text)
            if self.at_op(","):
                self.advance()
                continue
            return out

    def ring_decl(self):
        start = self.advance()
        name = self.expect("NAME").text
        self.expect_op("=")
        base = self.expect("NAME")
        if base.text != "QQ":
            raise self.error("only QQ and QQ(params) are supported as coefficient fields", base)
        params = []
        if self.at_op("("):
            self.advance()
            params = self.names(")")
            self.expect_op(")")
        self.expect_op("[")
        variables = self.names("]")
        if not variables:
            raise self.error("a ring needs at least one variable")
        self.expect_op("]")
        order = None
        if self.at("KEYWORD", "order"):
            self.advance()
            order = self.expect("NAME").text
            if self.at_op("("):
                self.advance()
                k = self.expect("NUMBER").text
                self.expect_op(")")
                order = f"{order}({k})"
        return RingDecl(name, tuple(params), tuple(variables), order, pos=(start.line, start.col))

    # -- expressions ------------------------------------------------------
    def expr(self):
        left = self.colon()
        if self.at_op("==", "!="):
            op = self.advance()
            right = self.colon()
            left = BinOp(op.text, left, right, pos=(op.line, op.col))
        return left

    def colon(self):
        left = self.sum()
        while self.at_op(":"):
            op = self.advance()
            left = BinOp(":", left, self.sum(), pos=(op.line, op.col))
        return left

    def sum(self):
        left = self.product()
        while self.at_op("+", "-"):
            op = self.advance()
            left = BinOp(op.text, left, self.product(), pos=(op.line, op.col))
        return left

    def product(self):
        left = self.unary()
        while self.at_op("*", "/"):
            op = self.advance()
            left = BinOp(op.text, left, self.unary(), pos=(op.line, op.col))
        return left

    def unary(self):
        if self.at_op("-"):
            op = self.advance()
            return Neg(self.unary(), pos=(op.line, op.col))
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            op = self.advance()
            return BinOp("^", base, self.unary(), pos=(op.line, op.col))
        return base

    def atom(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "NUMBER":
            self.advance()
            return Num(int(t.text), pos=pos)
        if t.kind == "STRING":
            self.advance()
            return Str(t.text, pos=pos)
        if t.kind == "NAME":
            self.advance()
            if self.at_op("("):
                return self.call(t.text, pos)
            return Name(t.text, pos=pos)
        if self.at_op("["):
            self.advance()
            items = []
            if not self.at_op("]"):
                items.append(self.expr())
                while self.at_op(","):
                    self.advance()
                    items.append(self.expr())
            self.expect_op("]")
            return ListExpr(tuple(items), pos=pos)
        if self.at_op("("):
            self.advance()
            e = self.expr()
            self.expect_op(")")
            return e
        raise self.error(f"expected an expression, found {self.describe(t)}")

    def call(self, func, pos):
        self.expect_op("(")
        args, kwargs = [], []
        if not self.at_op(")"):
            while True:
                t = self.tok
                if t.kind == "NAME" and self.peek().kind == "OP" and self.peek().text == "=":
                    self.advance()
                    self.advance()
                    kwargs.append(Keyword(t.text, self.expr(), pos=(t.line, t.col)))
                else:
                    if kwargs:
                        raise self.error("positional argument after keyword argument")
                    args.append(self.expr())
                if self.at_op(","):
                    self.advance()
                    continue
                break
        self.expect_op(")")
        return Call(func, tuple(args), tuple(kwargs), pos=pos)


def parse(source):
    """Parse script text into a :class:`Script`."""
    return Parser(source).parse_script()
