"""Algebras given by structure constants on an indexed basis."""
from __future__ import annotations

from hopfext.core.field import FieldSpec
from hopfext.core.linalg import axpy


class TableAlgebra:
    """Basis 0..n-1 with products ``table[(i, j)]`` (sparse vectors over indices)."""

    def __init__(self, field: FieldSpec, labels: list[str], table: dict, unit: dict, name: str = ""):
        self.field = field
        self.labels = list(labels)
        self.table = table
        self._unit = {k: v for k, v in unit.items() if v}
        self.name = name

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def basis(self) -> list[int]:
        return list(range(self.dim))

    def unit(self) -> dict:
        return dict(self._unit)

    def mul_basis(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def multiply(self, a: dict, b: dict) -> dict:
        field = self.field
        out: dict = {}
        for i, ci in a.items():
            for j, cj in b.items():
                axpy(field, out, field.mul(ci, cj), self.mul_basis(i, j))
        return out

    def normal_form(self, vec: dict) -> dict:
        return {k: v for k, v in vec.items() if v}

    def format(self, vec: dict) -> str:
        if not vec:
            return "0"
        parts = []
        for k in sorted(vec):
            c = vec[k]
            parts.append(self.labels[k] if c == 1 else f"{self.field.format(c)}*{self.labels[k]}")
        return " + ".join(parts)

    def format_word(self, k: int) -> str:
        return self.labels[k]

    def is_commutative(self) -> bool:
        return all(self.mul_basis(i, j) == self.mul_basis(j, i) for i in self.basis for j in self.basis if i < j)

    def __repr__(self) -> str:
        return f"TableAlgebra({self.name or '?'}, dim={self.dim})"


def table_of(algebra) -> TableAlgebra:
    """Structure constants of any algebra with ``basis`` / ``mul_basis`` (reindexed 0..n-1)."""
    index = {w: i for i, w in enumerate(algebra.basis)}
    table = {}
    for i, u in enumerate(algebra.basis):
        for j, v in enumerate(algebra.basis):
            prod = algebra.mul_basis(u, v)
            if prod:
                table[(i, j)] = {index[w]: c for w, c in prod.items()}
    unit = {index[w]: c for w, c in algebra.unit().items()}
    labels = [algebra.format_word(w) for w in algebra.basis]
    return TableAlgebra(algebra.field, labels, table, unit, name=getattr(algebra, "name", ""))
