"""Polynomial text: a small whitespace-insensitive expression grammar.

Supported syntax: '+', '-', '*', '/', '^', parentheses, integer
literals, and identifiers. '/' is accepted only where the divisor
evaluates to a nonzero rational constant, so '3/4*k' and 'x/2' parse
while 'x/y' is rejected. '^' takes a non-negative integer literal
exponent. Unary minus is allowed. The printer emits a canonical form
(terms sorted descending by the active monomial order) that parses back
to an equal polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Sequence

from .poly import CONST_MONO, MonomialOrder, Poly, mono_sort_key
from .ratfunc import RatFunc
from .symbols import Symbol, SymbolTable


class PolyParseError(ValueError):
    """Syntax or semantic error in polynomial text, with position info."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos} in {text!r})")
        self.pos = pos
        self.text = text


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup or ""
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: Optional[SymbolTable]) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0
        self.table = table

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.idx]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def fail(self, message: str) -> "PolyParseError":
        _, _, pos = self.peek()
        return PolyParseError(message, self.text, pos)

    def parse(self) -> Poly:
        result = self.expr()
        kind, value, _ = self.peek()
        if kind != "end":
            raise self.fail(f"unexpected token {value!r}")
        return result

    def expr(self) -> Poly:
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            first = self.term()
            if value == "-":
                first = -first
        else:
            first = self.term()
        total = first
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                nxt = self.term()
                total = total + nxt if value == "+" else total - nxt
            else:
                return total

    def term(self) -> Poly:
        total = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "*/":
                self.advance()
                rhs = self.factor()
                if value == "*":
                    total = total * rhs
                else:
                    if not rhs.is_const():
                        raise self.fail("divisor must be a rational constant")
                    c = rhs.constant_value()
                    if c == 0:
                        raise self.fail("division by zero")
                    total = total / c
            else:
                return total

    def factor(self) -> Poly:
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            inner = self.factor()
            return -inner if value == "-" else inner
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, _ = self.peek()
            if kind != "number":
                raise self.fail("exponent must be a non-negative integer literal")
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, _ = self.advance()
        if kind == "number":
            return Poly.const(int(value))
        if kind == "ident":
            sym = self.table.intern(value) if self.table is not None else Symbol(value)
            return Poly.var(sym)
        if kind == "op" and value == "(":
            inner = self.expr()
            kind, value, _ = self.peek()
            if not (kind == "op" and value == ")"):
                raise self.fail("expected ')'")
            self.advance()
            return inner
        self.idx -= 1
        raise self.fail("expected a number, identifier, or '('")


def parse_poly(text: str, table: Optional[SymbolTable] = None) -> Poly:
    """Parse polynomial text. Identifiers are interned into table when given."""
    if not isinstance(text, str):
        raise PolyParseError("polynomial text must be a string", str(text), 0)
    if not text.strip():
        raise PolyParseError("empty polynomial text", text, 0)
    return _Parser(text, table).parse()


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_mono(mono) -> str:
    parts = []
    for sym, exp in mono:
        parts.append(sym.name if exp == 1 else f"{sym.name}^{exp}")
    return "*".join(parts)


def format_poly(
    p: Poly,
    symbol_order: Optional[Sequence[Symbol]] = None,
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> str:
    """Canonical text, terms descending by the given order. Symbols absent
    from symbol_order are appended to it sorted by name."""
    if p.is_zero():
        return "0"
    present = p.sorted_symbols()
    if symbol_order is None:
        full_order = present
    else:
        listed = [s for s in symbol_order]
        seen = set(listed)
        full_order = listed + [s for s in present if s not in seen]
    monos = sorted(
        p.terms,
        key=lambda m: mono_sort_key(m, full_order, order),
        reverse=True,
    )
    pieces: list[str] = []
    for i, mono in enumerate(monos):
        coeff = p.terms[mono]
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if mono == CONST_MONO:
            body = _format_coeff(mag)
        elif mag == 1:
            body = _format_mono(mono)
        else:
            body = f"{_format_coeff(mag)}*{_format_mono(mono)}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def format_ratfunc(
    r: RatFunc,
    symbol_order: Optional[Sequence[Symbol]] = None,
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> str:
    num = format_poly(r.num, symbol_order, order)
    if r.den == Poly.one():
        return num
    den = format_poly(r.den, symbol_order, order)
    return f"({num})/({den})"
