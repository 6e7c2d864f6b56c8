"""Text syntax for polynomials, Laurent polynomials and rational functions.

Grammar (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "x" | "y" | "(" expr ")"

Division is only allowed by expressions free of y.  Negative exponents are
only allowed on y-free bases.
"""

from __future__ import annotations

import re

from .bivariate import BiPoly
from .field import QQ
from .poly import Poly, RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            skip = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + skip]!r}", pos + skip, text)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("var", m.group(2), start))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Value:
    """Polynomial in y with coefficients in k(x): {j: RationalFunction}."""

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {j: c for j, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, field, c):
        return cls(field, {0: RationalFunction.const(field, c)})

    def y_free(self) -> bool:
        return all(j == 0 for j in self.terms)

    def coeff0(self) -> RationalFunction:
        return self.terms.get(0, RationalFunction.const(self.field, 0))

    def __add__(self, o):
        t = dict(self.terms)
        for j, c in o.terms.items():
            t[j] = t[j] + c if j in t else c
        return _Value(self.field, t)

    def __neg__(self):
        return _Value(self.field, {j: -c for j, c in self.terms.items()})

    def __mul__(self, o):
        t: dict = {}
        for j1, c1 in self.terms.items():
            for j2, c2 in o.terms.items():
                j = j1 + j2
                t[j] = t[j] + c1 * c2 if j in t else c1 * c2
        return _Value(self.field, t)


class _Parser:
    def __init__(self, text: str, field):
        self.text = text
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> _Value:
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v + (-w)
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            w = self.unary()
            if tok[1] == "*":
                v = v * w
            else:
                if not w.y_free():
                    raise ParseError("division by an expression involving y", tok[2], self.text)
                den = w.coeff0()
                if not den:
                    raise ParseError("division by zero", tok[2], self.text)
                inv = den.inverse()
                v = _Value(self.field, {j: c * inv for j, c in v.terms.items()})
        return v

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                neg = True
            t = self.peek()
            if t[0] != "int":
                self.fail("expected integer exponent")
            self.take()
            n = t[1]
            if neg:
                if not base.y_free() or not base.coeff0():
                    raise ParseError("negative power of a non-invertible base", t[2], self.text)
                return _Value(self.field, {0: base.coeff0() ** (-n)})
            out = _Value.scalar(self.field, 1)
            for _ in range(n):
                out = out * base
            return out
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return _Value.scalar(self.field, t[1])
        if t[0] == "var":
            if t[1] == "x":
                return _Value(self.field, {0: RationalFunction(Poly.x(self.field))})
            return _Value(self.field, {1: RationalFunction.const(self.field, 1)})
        if t[0] == "op" and t[1] == "(":
            v = self.expr()
            if self.peek()[0] == "op" and self.peek()[1] == ")":
                self.take()
                return v
            self.fail("expected ')'")
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2], self.text)
        raise ParseError(f"unexpected {t[1]!r}", t[2], self.text)


def _parse(text: str, field) -> _Value:
    return _Parser(text, field).parse()


def parse_rational(text: str, field=QQ) -> RationalFunction:
    v = _parse(text, field)
    if not v.y_free():
        raise ParseError("expected an expression in x only", 0, text)
    return v.coeff0()


def parse_poly(text: str, field=QQ) -> Poly:
    r = parse_rational(text, field)
    if not r.is_poly():
        raise ParseError("expected a polynomial in x", 0, text)
    return r.num


def parse_scalar(text: str, field=QQ):
    p = parse_poly(text, field)
    if p.degree > 0:
        raise ParseError("expected a constant", 0, text)
    return p.coeff(0)


def parse_bivariate(text: str, field=QQ) -> BiPoly:
    v = _parse(text, field)
    if not v.terms:
        return BiPoly(field, [])
    dy = max(v.terms)
    cy = []
    for j in range(dy + 1):
        c = v.terms.get(j)
        if c is None:
            cy.append(Poly(field))
        elif not c.is_poly():
            raise ParseError("plane model coefficients must be polynomial in x", 0, text)
        else:
            cy.append(c.num)
    return BiPoly(field, cy)
