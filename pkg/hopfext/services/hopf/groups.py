"""Finite abelian groups Z/n_1 x ... x Z/n_r and their group algebras."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from hopfext.core.field import FieldSpec
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.presentation import make_presentation
from hopfext.services.hopf.structure import HopfStructure

Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def generator(self, i: int) -> Element:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def mul(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def inv(self, a: Element) -> Element:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def power(self, a: Element, k: int) -> Element:
        return tuple((x * k) % n for x, n in zip(a, self.orders))

    def element_order(self, a: Element) -> int:
        k = 1
        while self.power(a, k) != self.identity:
            k += 1
        return k

    @cached_property
    def elements(self) -> list[Element]:
        return [tuple(e) for e in itertools.product(*(range(n) for n in self.orders))]

    def format(self, a: Element, names: list[str] | None = None) -> str:
        names = names or (["g"] if self.rank == 1 else [f"g{i + 1}" for i in range(self.rank)])
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, a) if e]
        return "*".join(parts) or "1"


def cyclic_power_group(f: int, rank: int) -> AbelianGroup:
    """(Z/f)^rank."""
    return AbelianGroup((f,) * rank)


def group_generator_names(rank: int) -> list[str]:
    return ["g"] if rank == 1 else [f"g{i + 1}" for i in range(rank)]


def group_relations(field: FieldSpec, orders: tuple[int, ...], offset: int = 0) -> list[NcPolynomial]:
    """g_i^{n_i} = 1 and g_i g_j = g_j g_i, on generator indices offset..offset+r-1."""
    rels = []
    one = NcPolynomial.constant(field, 1)
    letters = [NcPolynomial.letter(field, offset + i) for i in range(len(orders))]
    for g, n in zip(letters, orders):
        rels.append(g ** n - one)
    for i, j in itertools.combinations(range(len(orders)), 2):
        rels.append(letters[j] * letters[i] - letters[i] * letters[j])
    return rels


def group_algebra(field: FieldSpec, group: AbelianGroup, name: str = "") -> HopfStructure:
    """k[G] with every generator grouplike."""
    names = group_generator_names(group.rank)
    pres = make_presentation(
        field, names, group_relations(field, group.orders),
        grouplike=set(names), expected_dimension=group.order,
        degree_bound=sum(group.orders) + 2, name=name or f"k[{'x'.join(f'Z/{n}' for n in group.orders)}]",
    )
    alg = FinBasisAlgebra.build(pres)
    delta, counit, antipode = {}, {}, {}
    for i, n in enumerate(group.orders):
        word = (i,)
        delta[i] = {(word, word): 1}
        counit[i] = 1
        antipode[i] = {word * (n - 1): 1}
    return HopfStructure(alg, delta, counit, antipode)
