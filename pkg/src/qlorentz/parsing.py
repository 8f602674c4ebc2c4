"""Recursive-descent parser for coordinate-algebra expressions and scalars.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' power]
    power  := int | '-' int | '(' ['-'] int ['/' int] ')'
    atom   := name | int | '(' expr ')'

Names are looked up in a symbol table of :class:`NCPoly` values; the default
table holds the coordinate generators (``X1``/``X2`` are rewritten in terms
of ``Z``/``Zb``), ``tau2``, ``i`` and ``q``.  Half-integer and negative
powers are allowed on scalar bases only; division only by scalars.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .ncpoly import NCPoly
from .scalars import I, ONE, Scalar, q_pow


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownSymbolError(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'op', 'end'
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)|$)")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(Token("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _coordinate_symbols() -> dict[str, NCPoly]:
    z, zb = NCPoly.gen("Z"), NCPoly.gen("Zb")
    half = Scalar(Fraction(1, 2))
    return {
        "X0": NCPoly.gen("X0"),
        "X3": NCPoly.gen("X3"),
        "Z": z,
        "Zb": zb,
        "X1": (z + zb) * half,
        "X2": (z - zb) * (-I * half),
        "tau2": NCPoly.gen("Tau2"),
        "Tau2": NCPoly.gen("Tau2"),
        "i": NCPoly.const(I),
        "q": NCPoly.const(q_pow(1)),
    }


COORDINATE_SYMBOLS: Mapping[str, NCPoly] = _coordinate_symbols()
SCALAR_SYMBOLS: Mapping[str, NCPoly] = {k: COORDINATE_SYMBOLS[k] for k in ("i", "q")}


class _Parser:
    def __init__(self, text: str, symbols: Mapping[str, NCPoly]):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.symbols = symbols

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> Token:
        tok = self.take()
        if tok.value != value or tok.kind != "op":
            raise ParseError(f"expected {value!r}, found {tok.value or 'end of input'!r}", tok.pos, self.text)
        return tok

    def error(self, tok: Token, msg: str):
        raise ParseError(msg, tok.pos, self.text)

    def parse(self) -> NCPoly:
        if self.peek().kind == "end":
            self.error(self.peek(), "empty expression")
        result = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.error(tok, f"unexpected {tok.value!r}")
        return result

    def expr(self) -> NCPoly:
        sign = ONE
        tok = self.peek()
        if tok.kind == "op" and tok.value in "+-":
            self.take()
            if tok.value == "-":
                sign = -ONE
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if tok.value == "+" else acc - rhs
            else:
                return acc

    def term(self) -> NCPoly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "*/":
                self.take()
                start = self.peek()
                rhs = self.factor()
                if tok.value == "*":
                    acc = acc * rhs
                else:
                    if not rhs.is_scalar():
                        self.error(start, "division by a non-scalar")
                    d = rhs.scalar_value()
                    if not d:
                        self.error(start, "division by zero")
                    acc = acc * d.inverse()
            else:
                return acc

    def factor(self) -> NCPoly:
        start = self.peek()
        base = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            self.take()
            ptok = self.peek()
            e = self.power()
            return self._raise(base, e, start, ptok)
        return base

    def power(self) -> Fraction:
        tok = self.take()
        if tok.kind == "int":
            return Fraction(int(tok.value))
        if tok.kind == "op" and tok.value == "-":
            n = self.take()
            if n.kind != "int":
                self.error(n, "expected an integer exponent")
            return -Fraction(int(n.value))
        if tok.kind == "op" and tok.value == "(":
            neg = False
            if self.peek().kind == "op" and self.peek().value == "-":
                self.take()
                neg = True
            n = self.take()
            if n.kind != "int":
                self.error(n, "expected an integer exponent")
            e = Fraction(int(n.value))
            if self.peek().kind == "op" and self.peek().value == "/":
                self.take()
                d = self.take()
                if d.kind != "int" or int(d.value) == 0:
                    self.error(d, "expected a nonzero integer denominator")
                e = e / int(d.value)
            self.expect(")")
            return -e if neg else e
        self.error(tok, "expected an exponent")

    def _raise(self, base: NCPoly, e: Fraction, start: Token, ptok: Token) -> NCPoly:
        if base.is_scalar():
            b = base.scalar_value()
            if e.denominator == 1:
                if not b and e < 0:
                    self.error(ptok, "negative power of zero")
                return NCPoly.const(b ** int(e))
            if b == q_pow(1) and e.denominator == 2:
                return NCPoly.const(q_pow(e))
            self.error(ptok, "fractional exponents are only allowed on q (half-integers)")
        if e.denominator != 1 or e < 0:
            self.error(ptok, "generators take non-negative integer exponents only")
        return base ** int(e)

    def atom(self) -> NCPoly:
        tok = self.take()
        if tok.kind == "int":
            return NCPoly.const(Scalar(int(tok.value)))
        if tok.kind == "name":
            if tok.value not in self.symbols:
                raise UnknownSymbolError(f"unknown symbol {tok.value!r}", tok.pos, self.text)
            return self.symbols[tok.value]
        if tok.kind == "op" and tok.value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.error(tok, f"unexpected {tok.value or 'end of input'!r}")


def parse_expression(text: str, symbols: Mapping[str, NCPoly] | None = None) -> NCPoly:
    """Parse ``text`` into an (unreduced) :class:`NCPoly`."""
    return _Parser(text, COORDINATE_SYMBOLS if symbols is None else symbols).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse canonical (or any grammar-conforming) scalar text."""
    p = _Parser(text, SCALAR_SYMBOLS).parse()
    return p.scalar_value()
