"""
Expression parser for relations and coproduct values.

Grammar (whitespace ignored):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

NAME is a generator or a declared scalar symbol. ``/`` only divides by
constants, so ``1/2`` is the inverse of 2 in the field. Tensors are written
``left ⊗ right`` (``(x)`` is accepted for ``⊗``) and summed at top level.
"""
from __future__ import annotations

import re

from hopfext.core.errors import ParseError
from hopfext.core.field import FieldSpec
from hopfext.services.algebra.polynomial import NcPolynomial

TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\(x\)|⊗|[-+*/^()]))")


def _tokenize(text: str, line: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        num, name, op = m.groups()
        col = m.start() + (len(m.group(0)) - len(m.group(0).lstrip())) + 1
        if num is not None:
            tokens.append(("num", num, col))
        elif name is not None:
            tokens.append(("name", name, col))
        else:
            tokens.append(("op", "⊗" if op == "(x)" else op, col))
        pos = m.end()
    return tokens


class ExpressionParser:
    """Parses strings into NcPolynomials over a fixed generator set."""

    def __init__(self, field: FieldSpec, names: list[str], scalars: dict[str, int] | None = None):
        self.field = field
        self.index = {n: i for i, n in enumerate(names)}
        self.scalars = dict(scalars or {})

    # ── public ──

    def parse(self, text: str, line: int = 0) -> NcPolynomial:
        self._tokens = _tokenize(text, line)
        self._pos = 0
        self._line = line
        poly = self._expr()
        if self._pos != len(self._tokens):
            _, value, col = self._tokens[self._pos]
            raise ParseError(f"unexpected token {value!r}", line, col)
        return poly

    def parse_tensor(self, text: str, line: int = 0) -> dict:
        """Parse ``a ⊗ b + ...`` into a dict (word, word) -> coefficient."""
        out: dict = {}
        for sign, chunk in _split_top_level(text, line):
            halves = _split_tensor(chunk)
            if len(halves) != 2:
                raise ParseError(f"tensor term {chunk.strip()!r} needs exactly one ⊗", line)
            left = self.parse(halves[0], line)
            right = self.parse(halves[1], line)
            coef = self.field.scalar(sign)
            for u, cu in left.terms.items():
                for v, cv in right.terms.items():
                    c = self.field.add(out.get((u, v), 0), self.field.mul(coef, self.field.mul(cu, cv)))
                    if c:
                        out[(u, v)] = c
                    else:
                        out.pop((u, v), None)
        return out

    # ── recursive descent ──

    def _peek(self):
        return self._tokens[self._pos] if self._pos < len(self._tokens) else None

    def _take(self, value: str | None = None):
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self._line)
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", self._line, tok[2])
        self._pos += 1
        return tok

    def _expr(self) -> NcPolynomial:
        negate = False
        tok = self._peek()
        if tok and tok[1] == "-":
            self._take()
            negate = True
        poly = self._term()
        if negate:
            poly = -poly
        while (tok := self._peek()) and tok[1] in "+-" and tok[0] == "op":
            self._take()
            rhs = self._term()
            poly = poly + rhs if tok[1] == "+" else poly - rhs
        return poly

    def _term(self) -> NcPolynomial:
        poly = self._factor()
        while (tok := self._peek()) and tok[0] == "op" and tok[1] in "*/":
            self._take()
            rhs = self._factor()
            if tok[1] == "*":
                poly = poly * rhs
            else:
                if not rhs.is_constant() or not rhs.constant_term():
                    raise ParseError("division only by nonzero constants", self._line, tok[2])
                poly = poly.scaled(self.field.inv(rhs.constant_term()))
        return poly

    def _factor(self) -> NcPolynomial:
        base = self._atom()
        tok = self._peek()
        if tok and tok[1] == "^":
            self._take()
            kind, value, col = self._take()
            if kind != "num":
                raise ParseError("exponent must be an integer", self._line, col)
            base = base ** int(value)
        return base

    def _atom(self) -> NcPolynomial:
        kind, value, col = self._take()
        if kind == "num":
            return NcPolynomial.constant(self.field, self.field.scalar(int(value)))
        if kind == "name":
            if value in self.index:
                return NcPolynomial.letter(self.field, self.index[value])
            if value in self.scalars:
                return NcPolynomial.constant(self.field, self.scalars[value])
            raise ParseError(f"unknown symbol {value!r}", self._line, col)
        if value == "(":
            inner = self._expr()
            self._take(")")
            return inner
        if value == "-":
            return -self._atom()
        raise ParseError(f"unexpected token {value!r}", self._line, col)


def _split_top_level(text: str, line: int) -> list[tuple[int, str]]:
    """Split on + and - outside parentheses, keeping the sign of each chunk."""
    chunks, depth, sign, start = [], 0, 1, 0
    i = 0
    text = text.replace("(x)", "⊗")
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parenthesis", line, i + 1)
        elif ch in "+-" and depth == 0:
            body = text[start:i]
            if body.strip():
                chunks.append((sign, body))
            elif ch == "-":
                sign = -sign
                start = i + 1
                i += 1
                continue
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    if depth:
        raise ParseError("unbalanced parenthesis", line, len(text))
    if text[start:].strip():
        chunks.append((sign, text[start:]))
    return chunks


def _split_tensor(chunk: str) -> list[str]:
    depth, parts, start = 0, [], 0
    for i, ch in enumerate(chunk):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "⊗" and depth == 0:
            parts.append(chunk[start:i])
            start = i + 1
    parts.append(chunk[start:])
    return parts
