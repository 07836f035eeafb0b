"""Bicharacter 2-cocycles on Γ = (Z/f)^theta and their alternating forms."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hopfext.core.config import settings
from hopfext.core.errors import FieldError, PreconditionError
from hopfext.core.field import FieldSpec
from hopfext.services.hopf.groups import AbelianGroup, Element, cyclic_power_group

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _bimultiplicative(field: FieldSpec, table: Matrix, a: Element, b: Element) -> int:
    out = 1
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out = field.mul(out, field.pow(table[i][j], ai * bj))
    return out


@dataclass(frozen=True)
class GroupCocycle:
    """sigma(g_i, g_j) = table[i][j], extended bimultiplicatively to Γ x Γ."""
    field: FieldSpec
    f: int
    table: Matrix

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise PreconditionError("cocycle table must be square")
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if v == 0:
                    raise PreconditionError(f"sigma(g{i + 1}, g{j + 1}) = 0")
                if self.f % self.field.element_order(v):
                    raise FieldError(
                        f"ord sigma(g{i + 1}, g{j + 1}) = {self.field.element_order(v)} does not divide f={self.f}"
                    )

    @property
    def theta(self) -> int:
        return len(self.table)

    @property
    def group(self) -> AbelianGroup:
        return cyclic_power_group(self.f, self.theta)

    def value(self, a: Element, b: Element) -> int:
        return _bimultiplicative(self.field, self.table, a, b)

    def inverse_value(self, a: Element, b: Element) -> int:
        """sigma^{-1}(a, b), the convolution inverse on group-likes."""
        return self.field.inv(self.value(a, b))

    def inverse(self) -> "GroupCocycle":
        return GroupCocycle(self.field, self.f, tuple(tuple(self.field.inv(v) for v in row) for row in self.table))

    def is_trivial(self) -> bool:
        return all(v == 1 for row in self.table for v in row)

    def alternating(self) -> "AntisymForm":
        field = self.field
        n = self.theta
        return AntisymForm(field, tuple(
            tuple(field.div(self.table[i][j], self.table[j][i]) for j in range(n)) for i in range(n)
        ))

    def check_identity(self, samples: int | None = None, seed: int | None = None) -> tuple[bool, str | None]:
        """sigma(gh, k) sigma(g, h) = sigma(g, hk) sigma(h, k) on random triples."""
        group = self.group
        field = self.field
        rng = np.random.default_rng(settings.default_seed if seed is None else seed)
        count = samples or settings.random_samples
        draws = rng.integers(0, self.f, size=(count, 3, self.theta))
        for g, h, k in draws:
            g, h, k = tuple(int(v) for v in g), tuple(int(v) for v in h), tuple(int(v) for v in k)
            left = field.mul(self.value(group.mul(g, h), k), self.value(g, h))
            right = field.mul(self.value(g, group.mul(h, k)), self.value(h, k))
            if left != right:
                return False, f"cocycle identity fails at ({group.format(g)}, {group.format(h)}, {group.format(k)})"
        return True, None

    def format(self) -> str:
        return "; ".join(" ".join(self.field.format(v) for v in row) for row in self.table)


@dataclass(frozen=True)
class AntisymForm:
    """vartheta(g, h) = sigma(g, h) sigma(h, g)^{-1} on generators."""
    field: FieldSpec
    table: Matrix

    def value(self, a: Element, b: Element) -> int:
        return _bimultiplicative(self.field, self.table, a, b)

    def check(self, group: AbelianGroup, samples: int | None = None, seed: int | None = None) -> tuple[bool, str | None]:
        """vartheta(g, g) = 1 and vartheta(g, h) vartheta(h, g) = 1, on generators and on random pairs."""
        field = self.field
        n = len(self.table)
        for i in range(n):
            if self.table[i][i] != 1:
                return False, f"vartheta(g{i + 1}, g{i + 1}) != 1"
            for j in range(n):
                if field.mul(self.table[i][j], self.table[j][i]) != 1:
                    return False, f"vartheta(g{i + 1}, g{j + 1}) vartheta(g{j + 1}, g{i + 1}) != 1"
        rng = np.random.default_rng(settings.default_seed if seed is None else seed)
        draws = rng.integers(0, min(group.orders), size=(samples or settings.random_samples, 2, group.rank))
        for g, h in draws:
            g, h = tuple(int(v) for v in g), tuple(int(v) for v in h)
            if self.value(g, g) != 1 or field.mul(self.value(g, h), self.value(h, g)) != 1:
                return False, f"alternating identity fails at ({group.format(g)}, {group.format(h)})"
        return True, None


def trivial_cocycle(field: FieldSpec, f: int, theta: int) -> GroupCocycle:
    return GroupCocycle(field, f, tuple(tuple(1 for _ in range(theta)) for _ in range(theta)))


def cocycle_from_matrices(field: FieldSpec, q, q_target, f: int) -> GroupCocycle:
    """sigma(g_i, g_j) = q'_ij / q_ij for i <= j and 1 for i > j."""
    q, q_target = _as_matrix(q), _as_matrix(q_target)
    n = len(q)
    if len(q_target) != n:
        raise PreconditionError(f"matrices of sizes {n} and {len(q_target)}")
    table = tuple(
        tuple(field.div(q_target[i][j], q[i][j]) if i <= j else 1 for j in range(n)) for i in range(n)
    )
    return GroupCocycle(field, f, table)


def twist_equivalent(field: FieldSpec, q, q_target, f: int) -> tuple[bool, GroupCocycle | None, str | None]:
    """Whether q' = vartheta q for a bicharacter sigma on (Z/f)^theta, with that sigma."""
    q, q_target = _as_matrix(q), _as_matrix(q_target)
    n = len(q)
    for i in range(n):
        if q[i][i] != q_target[i][i]:
            return False, None, f"diagonal entries differ at {i + 1}"
        for j in range(i + 1, n):
            if field.mul(q[i][j], q[j][i]) != field.mul(q_target[i][j], q_target[j][i]):
                return False, None, f"q_{i + 1}{j + 1} q_{j + 1}{i + 1} is not preserved"
    try:
        sigma = cocycle_from_matrices(field, q, q_target, f)
    except FieldError as e:
        return False, None, str(e)
    return True, sigma, None
