"""Augmented algebras A = k1 ⊕ A+ and group actions on them by augmentation-preserving automorphisms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from hopfext.core.errors import PreconditionError
from hopfext.core.linalg import axpy
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.words import ONE, Word
from hopfext.services.hopf.groups import AbelianGroup, Element
from hopfext.services.nichols.braided import Realization


def _internal_grading(alg: FinBasisAlgebra) -> Callable[[Word], int] | None:
    """Total degree of words when A is connected graded, else None."""
    pres = alg.presentation
    if any(g.grouplike for g in pres.generators):
        return None
    if pres.graded:
        weights = [sum(g.degree) for g in pres.generators]
        if all(w > 0 for w in weights):
            return lambda word: sum(weights[g] for g in word)
        return None
    if all(len({len(w) for w in rel.terms}) == 1 for rel in pres.relations):
        return len
    return None


class AugmentedAlgebra:
    """A+ has basis w - eps(w) 1 for the normal words w != 1, indexed 0..dim A+ - 1."""

    def __init__(self, algebra: FinBasisAlgebra, name: str = ""):
        self.algebra = algebra
        self.field = algebra.field
        self.name = name or algebra.name or "A"
        self._check_augmentation()
        self.plus: list[Word] = [w for w in algebra.basis if w != ONE]
        self.index = {w: i for i, w in enumerate(self.plus)}
        self.eps = [algebra.counit({w: 1}) for w in self.plus]
        self.grading = _internal_grading(algebra)

    def _check_augmentation(self) -> None:
        alg = self.algebra
        for rel in alg.presentation.relations:
            value = 0
            for w, c in rel.terms.items():
                if all(alg.augmentation[g] for g in w):
                    value = self.field.add(value, c)
            if value:
                raise PreconditionError(f"augmentation does not kill {rel.format(alg.names)}")

    @property
    def dim_plus(self) -> int:
        return len(self.plus)

    @property
    def connected(self) -> bool:
        return self.grading is not None

    def coordinates(self, vec: dict) -> dict[int, int]:
        """Coordinates over A+ of an element with eps = 0."""
        return {self.index[w]: c for w, c in vec.items() if w != ONE}

    def degree(self, a: int) -> int:
        return self.grading(self.plus[a]) if self.grading else 0

    @cached_property
    def _products(self) -> dict[tuple[int, int], dict[int, int]]:
        field = self.field
        out = {}
        for a, u in enumerate(self.plus):
            for b, v in enumerate(self.plus):
                prod = self.coordinates(self.algebra.mul_basis(u, v))
                if self.eps[a]:
                    axpy(field, prod, field.neg(self.eps[a]), {b: 1})
                if self.eps[b]:
                    axpy(field, prod, field.neg(self.eps[b]), {a: 1})
                if prod:
                    out[(a, b)] = prod
        return out

    def product(self, a: int, b: int) -> dict[int, int]:
        """(u - eps u)(v - eps v) in A+ coordinates."""
        return self._products.get((a, b), {})

    def letter_degrees(self) -> list[int]:
        return [self.grading((g,)) if self.grading else 0 for g in range(self.algebra.ngens)]

    def __repr__(self) -> str:
        return f"AugmentedAlgebra({self.name}, dim A+={self.dim_plus})"


@dataclass
class GroupAction:
    """``letters[k][i]`` is the image of generator i under g_k, as {generator: coefficient}."""
    group: AbelianGroup
    letters: list[dict[int, dict[int, int]]]

    def _letter_image(self, field, a: Element, i: int) -> dict[int, int]:
        vec = {i: 1}
        for k, e in enumerate(a):
            for _ in range(e):
                out: dict = {}
                for j, c in vec.items():
                    axpy(field, out, c, self.letters[k].get(j, {j: 1}))
                vec = out
        return vec

    def on_plus(self, aug: AugmentedAlgebra) -> dict[Element, list[dict[int, int]]]:
        """The action of every group element on A+ coordinates."""
        alg = aug.algebra
        field = aug.field
        out = {}
        for a in self.group.elements:
            images = [alg.normal_form({(j,): c for j, c in self._letter_image(field, a, i).items()})
                      for i in range(alg.ngens)]
            rows = []
            for w in aug.plus:
                vec = alg.unit()
                for g in w:
                    vec = alg.multiply(vec, images[g])
                if alg.counit(vec) != alg.counit({w: 1}):
                    raise PreconditionError(f"{self.group.format(a)} does not preserve the augmentation")
                rows.append(aug.coordinates(vec))
            out[a] = rows
        return out


def action_from_realization(alg: FinBasisAlgebra, r: Realization) -> GroupAction:
    """Γ = (Z/f)^theta acting on the generators of a Nichols algebra through the realization."""
    pres = alg.presentation
    to_gen = [pres.index(label) for label in r.space.labels]
    letters = []
    for k in range(r.rank):
        letters.append({
            to_gen[b]: {to_gen[w]: c for w, c in r.actions[k][b].items()} for b in range(r.space.dim)
        })
    return GroupAction(AbelianGroup((r.f,) * r.rank), letters)
