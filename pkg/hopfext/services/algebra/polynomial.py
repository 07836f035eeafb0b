"""Noncommutative polynomials: sparse maps Word -> field element."""
from __future__ import annotations

from hopfext.core.field import FieldSpec
from hopfext.core.linalg import axpy, scale
from hopfext.services.algebra.words import ONE, MonomialOrder, Word, format_word


def word_product(field: FieldSpec, a: dict, b: dict) -> dict:
    """Product in the free algebra (concatenation)."""
    out: dict = {}
    add, mul = field.add, field.mul
    for u, cu in a.items():
        for v, cv in b.items():
            w = u + v
            c = add(out.get(w, 0), mul(cu, cv))
            if c:
                out[w] = c
            else:
                out.pop(w, None)
    return out


class NcPolynomial:
    """Immutable element of the free algebra k<X>."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms: dict | None = None):
        self.field = field
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, field: FieldSpec, c: int) -> "NcPolynomial":
        return cls(field, {ONE: c})

    @classmethod
    def letter(cls, field: FieldSpec, g: int) -> "NcPolynomial":
        return cls(field, {(g,): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return set(self.terms) <= {ONE}

    def constant_term(self) -> int:
        return self.terms.get(ONE, 0)

    def leading_word(self, order: MonomialOrder) -> Word:
        return order.leading(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        out = dict(self.terms)
        axpy(self.field, out, 1, other.terms)
        return NcPolynomial(self.field, out)

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        out = dict(self.terms)
        axpy(self.field, out, self.field.neg(1), other.terms)
        return NcPolynomial(self.field, out)

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial(self.field, scale(self.field, self.terms, self.field.neg(1)))

    def __mul__(self, other) -> "NcPolynomial":
        if isinstance(other, int):
            return self.scaled(self.field.scalar(other))
        return NcPolynomial(self.field, word_product(self.field, self.terms, other.terms))

    def scaled(self, c: int) -> "NcPolynomial":
        """Multiply by a field element (int encoding)."""
        return NcPolynomial(self.field, scale(self.field, self.terms, c))

    def __pow__(self, n: int) -> "NcPolynomial":
        out = NcPolynomial.constant(self.field, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, NcPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def format(self, names: list[str], order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        words = sorted(self.terms, key=order.key if order else None, reverse=True)
        parts = []
        for w in words:
            c = self.terms[w]
            coef = self.field.format(c)
            body = format_word(w, names)
            if not w:
                parts.append(coef)
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{coef}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NcPolynomial({self.terms})"


def commutator(a: NcPolynomial, b: NcPolynomial, q: int = 1) -> NcPolynomial:
    """The q-commutator ab - q ba."""
    return a * b - (b * a).scaled(q)
