"""Syntax tree. Positions are excluded from equality so that trees compare
by structure alone."""

from dataclasses import dataclass, field


def _pos():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple = _pos()


@dataclass(frozen=True)
class Str:
    value: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Name:
    id: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class ListExpr:
    items: tuple
    pos: tuple = _pos()


@dataclass(frozen=True)
class Keyword:
    name: str
    value: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    kwargs: tuple = ()
    pos: tuple = _pos()


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class RingDecl:
    name: str
    params: tuple
    variables: tuple
    order: str = None
    pos: tuple = _pos()


@dataclass(frozen=True)
class Assign:
    target: str
    value: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Assert:
    test: object
    message: str = None
    pos: tuple = _pos()


@dataclass(frozen=True)
class ExprStmt:
    expr: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Script:
    statements: tuple
