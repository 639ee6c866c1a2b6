"""Textual format for polynomials and rational maps.

Grammar (whitespace insignificant, multiplication always written ``*``):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' factor]
    atom   := INTEGER | NAME | '(' expr ')'

Exponents must fold to nonnegative integer constants.  ``a/b`` performs
exact field division, so rational coefficients (``3/2*x``) and rational
map components (``(9 + t^2)/(27 + t^2)``) use the same rule.  A rational
map is three comma-separated components in an optional outer pair of
parentheses.

Printing is deterministic: terms in graded-lexicographic descending
order, canonical sign placement, explicit ``*``.  ``parse(print(v))``
reproduces ``v`` exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .poly import MultiPoly
from .ratfunc import RatFunc, RationalMap3


class ParseError(ValueError):
    """Syntax or validation error with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^,]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.lastindex is None:
            break  # illegal character, or only whitespace remains
        start = m.start(m.lastindex)
        value = m.group(m.lastindex)
        kind = "int" if m.group(1) else ("name" if m.group(2) else "op")
        tokens.append((kind, value, start))
        pos = m.end()
    rest = text[pos:]
    if rest.strip():
        bad = pos + len(rest) - len(rest.lstrip())
        line, col = _line_col(text, bad)
        raise ParseError(f"unexpected character {text[bad]!r}", line, col)
    tokens.append(("end", "", len(text)))
    return tokens


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    last_nl = text.rfind("\n", 0, offset)
    return line, offset - (last_nl + 1) + 1


class _Parser:
    def __init__(self, text: str, allowed_vars: Optional[Sequence[str]]):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allowed = set(allowed_vars) if allowed_vars is not None else None

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok=None) -> ParseError:
        tok = tok if tok is not None else self.peek()
        line, col = _line_col(self.text, tok[2])
        return ParseError(message, line, col)

    def expect_op(self, op: str):
        kind, value, _ = self.peek()
        if kind != "op" or value != op:
            raise self.error(f"expected {op!r}")
        return self.next()

    def parse_expr(self) -> RatFunc:
        kind, value, _ = self.peek()
        negate = False
        while kind == "op" and value in "+-":
            if value == "-":
                negate = not negate
            self.next()
            kind, value, _ = self.peek()
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                rhs = self.parse_term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def parse_term(self) -> RatFunc:
        result = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "*/":
                tok = self.next()
                rhs = self.parse_factor()
                if value == "*":
                    result = result * rhs
                else:
                    if rhs.is_zero():
                        raise self.error("division by a zero polynomial", tok)
                    result = result / rhs
            else:
                return result

    def parse_factor(self) -> RatFunc:
        base = self.parse_atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            tok = self.next()
            expo = self.parse_factor()
            if not expo.is_constant():
                raise self.error("exponent must be a constant", tok)
            e = expo.constant_value()
            if e.denominator != 1:
                raise self.error("non-integer exponent", tok)
            if e < 0:
                raise self.error("negative exponent", tok)
            return base ** int(e)
        return base

    def parse_atom(self) -> RatFunc:
        kind, value, _ = self.peek()
        if kind == "int":
            self.next()
            return RatFunc(MultiPoly.const(int(value)))
        if kind == "name":
            tok = self.next()
            if self.allowed is not None and value not in self.allowed:
                raise self.error(f"variable {value!r} is not allowed here", tok)
            return RatFunc(MultiPoly.var(value))
        if kind == "op" and value == "(":
            self.next()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value in "+-":
            # handled by parse_expr for leading signs; here it is a stray sign
            tok = self.peek()
            self.next()
            inner = self.parse_factor()
            return -inner if value == "-" else inner
        raise self.error("expected a number, variable or parenthesized expression")

    def at_end(self) -> bool:
        return self.peek()[0] == "end"


def parse_ratfunc(text: str, allowed_vars: Optional[Sequence[str]] = None) -> RatFunc:
    """Parse one rational expression; the whole input must be consumed."""
    if not text.strip():
        raise ParseError("empty input", 1, 1)
    p = _Parser(text, allowed_vars)
    value = p.parse_expr()
    if not p.at_end():
        raise p.error("unexpected trailing input")
    return value


def parse_poly(text: str, allowed_vars: Optional[Sequence[str]] = None) -> MultiPoly:
    """Parse a polynomial; rational coefficients are fine, division by a
    nonconstant polynomial is not."""
    value = parse_ratfunc(text, allowed_vars)
    if not value.is_polynomial():
        raise ParseError("expression is not a polynomial (nonconstant denominator)", 1, 1)
    return value.as_poly()


def parse_map(text: str, params: Sequence[str] = ("s", "t")) -> RationalMap3:
    """Parse a 3-component rational map over the given parameters."""
    if not text.strip():
        raise ParseError("empty input", 1, 1)
    p = _Parser(text, params)
    saved = p.pos
    components = None
    if p.peek()[:2] == ("op", "("):
        # try the parenthesized-triple form first
        try:
            p.next()
            comps = [p.parse_expr()]
            while p.peek()[:2] == ("op", ","):
                p.next()
                comps.append(p.parse_expr())
            p.expect_op(")")
            if not p.at_end():
                raise p.error("unexpected trailing input")
            components = comps
        except ParseError:
            p.pos = saved
            components = None
    if components is None:
        comps = [p.parse_expr()]
        while p.peek()[:2] == ("op", ","):
            p.next()
            comps.append(p.parse_expr())
        if not p.at_end():
            raise p.error("unexpected trailing input")
        components = comps
    if len(components) != 3:
        raise ParseError(f"a rational map needs 3 components, got {len(components)}", 1, 1)
    return RationalMap3(components, tuple(params))


def print_poly(p: MultiPoly) -> str:
    """Deterministic text form of a polynomial."""
    return p.to_text()


def print_ratfunc(r: RatFunc) -> str:
    return r.to_text()


def print_map(m: RationalMap3) -> str:
    """Deterministic text form of a rational map."""
    return m.to_text()


@dataclass(frozen=True)
class SurfaceInput:
    """Either an implicit surface polynomial or a parametric surface map."""

    kind: str  # "implicit" | "parametric"
    implicit: Optional[MultiPoly] = None
    parametric: Optional[RationalMap3] = None

    @staticmethod
    def from_text(text: str) -> "SurfaceInput":
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty input", 1, 1)
        depth = 0
        has_top_comma = False
        for ch in stripped:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth <= 1:
                has_top_comma = True
        if has_top_comma:
            m = parse_map(stripped, params=("s", "t"))
            if all(c.derivative("s").is_zero() and c.derivative("t").is_zero() for c in m.components):
                raise ParseError("parametric surface is constant", 1, 1)
            return SurfaceInput(kind="parametric", parametric=m)
        p = parse_poly(stripped, allowed_vars=("x", "y", "z"))
        if p.is_constant():
            raise ParseError("implicit surface polynomial is constant", 1, 1)
        return SurfaceInput(kind="implicit", implicit=p)
