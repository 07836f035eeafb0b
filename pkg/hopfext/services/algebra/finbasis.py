"""Finite-dimensional algebras with a normal-word basis."""
from __future__ import annotations

from hopfext.core.errors import PreconditionError
from hopfext.core.linalg import axpy
from hopfext.core.logger import log_finding, log_step
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.presentation import Presentation
from hopfext.services.algebra.rewriting import RewriteSystem, complete
from hopfext.services.algebra.words import ONE, Word, format_word


class FinBasisAlgebra:
    """k<X>/(R) realized on the normal words of a complete rewrite system."""

    def __init__(self, presentation: Presentation, rws: RewriteSystem):
        if not rws.complete:
            raise PreconditionError("FinBasisAlgebra needs a complete rewrite system")
        self.presentation = presentation
        self.rws = rws
        self.field = presentation.field
        self.levels = rws.normal_words()
        self.basis: list[Word] = [w for level in self.levels for w in level]
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.augmentation = {g.index: (1 if g.grouplike else 0) for g in presentation.generators}
        self._mul_cache: dict = {}
        self.dimension_matches = (
            presentation.expected_dimension is None or presentation.expected_dimension == self.dim
        )

    @classmethod
    def build(cls, presentation: Presentation, degree_bound: int | None = None) -> "FinBasisAlgebra":
        rws = complete(presentation, degree_bound)
        alg = cls(presentation, rws)
        log_step("basis", name=presentation.name or None, dim=alg.dim, expected=presentation.expected_dimension)
        if not alg.dimension_matches:
            log_finding(
                "normal-word count differs from the expected dimension",
                name=presentation.name, found=alg.dim, expected=presentation.expected_dimension,
            )
        return alg

    # ── basic data ──

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def names(self) -> list[str]:
        return self.presentation.names

    @property
    def name(self) -> str:
        return self.presentation.name

    @property
    def ngens(self) -> int:
        return len(self.presentation.generators)

    def generators(self) -> list[Word]:
        return [(g.index,) for g in self.presentation.generators]

    def generator(self, name: str) -> dict:
        return self.normal_form({(self.presentation.index(name),): 1})

    def unit(self) -> dict:
        return {ONE: 1}

    # ── arithmetic ──

    def normal_form(self, vec: dict) -> dict:
        return self.rws.normal_form(vec)

    def element(self, expr: str | NcPolynomial) -> dict:
        poly = self.presentation.parse(expr) if isinstance(expr, str) else expr
        return self.normal_form(poly.terms)

    def mul_basis(self, u: Word, v: Word) -> dict:
        key = (u, v)
        out = self._mul_cache.get(key)
        if out is None:
            out = self.rws.normal_form_word(u + v)
            self._mul_cache[key] = out
        return out

    def multiply(self, a: dict, b: dict) -> dict:
        field = self.field
        out: dict = {}
        for u, cu in a.items():
            for v, cv in b.items():
                axpy(field, out, field.mul(cu, cv), self.mul_basis(u, v))
        return out

    def power(self, a: dict, n: int) -> dict:
        out = self.unit()
        for _ in range(n):
            out = self.multiply(out, a)
        return out

    def word_value(self, word: Word) -> dict:
        """Normal form of an arbitrary (possibly non-normal) word."""
        return self.rws.normal_form_word(word)

    def counit(self, vec: dict) -> int:
        """Augmentation: grouplike letters go to 1, the others to 0."""
        field = self.field
        total = 0
        for w, c in vec.items():
            if all(self.augmentation[g] for g in w):
                total = field.add(total, c)
        return total

    def hilbert_series(self) -> list[int]:
        return [len(level) for level in self.levels]

    def format(self, vec: dict) -> str:
        return NcPolynomial(self.field, vec).format(self.names, self.presentation.order)

    def format_word(self, w: Word) -> str:
        return format_word(w, self.names)

    def __repr__(self) -> str:
        return f"FinBasisAlgebra({self.name or '?'}, dim={self.dim})"


def multiply(a: NcPolynomial, b: NcPolynomial, alg: FinBasisAlgebra) -> NcPolynomial:
    return NcPolynomial(alg.field, alg.multiply(alg.normal_form(a.terms), alg.normal_form(b.terms)))


def hilbert_series(alg: FinBasisAlgebra) -> list[int]:
    return alg.hilbert_series()
