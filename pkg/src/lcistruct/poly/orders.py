"""Monomial orders on exponent tuples.

Every order exposes ``key(exp)``, a flat tuple of ints whose natural tuple
order is the monomial order, and ``neg_key`` for max-heaps.
"""

import re


def _grevlex(exp):
    return (sum(exp),) + tuple(-a for a in reversed(exp))


class MonomialOrder:
    """lex, grevlex, or a two-block elimination order.

    ``MonomialOrder("elim", 2)`` compares the first two variables by grevlex
    first and breaks ties by grevlex on the remaining ones, so any monomial
    involving the first block beats every monomial free of it.
    """

    __slots__ = ("kind", "block", "key", "neg_key")

    def __init__(self, kind="grevlex", block=0):
        if kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elim" and block < 1:
            raise ValueError("elimination order needs a block size >= 1")
        self.kind = kind
        self.block = block if kind == "elim" else 0
        if kind == "lex":
            key = tuple
        elif kind == "grevlex":
            key = _grevlex
        else:
            k = block

            def key(exp):
                return _grevlex(exp[:k]) + _grevlex(exp[k:])

        self.key = key
        self.neg_key = lambda exp: tuple(-a for a in key(exp))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        m = re.fullmatch(r"(?:elim|block)\s*\(\s*(\d+)\s*\)", text)
        if m:
            return cls("elim", int(m.group(1)))
        return cls(text)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.block) == (
            other.kind,
            other.block,
        )

    def __hash__(self):
        return hash((self.kind, self.block))

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind

    def __repr__(self):
        return f"MonomialOrder({str(self)!r})"


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination(k):
    return MonomialOrder("elim", k)
