"""
Sparse exact linear algebra over a FieldSpec.

Vectors are dicts ``key -> nonzero int`` with mutually comparable keys (words,
pairs of words, ints). ``EchelonBasis`` keeps an incrementally built reduced row
echelon form in the style of sympy's ``sdm_irref``: rows indexed by pivot column
plus a ``nonzero_columns`` map so a new pivot is cancelled from older rows
without scanning them all.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Hashable, Iterable

import numpy as np

from hopfext.core.field import FieldSpec

Vec = dict


def axpy(field: FieldSpec, target: Vec, coef: int, source: Vec) -> Vec:
    """target += coef * source, in place; zero entries are dropped."""
    if not coef:
        return target
    add, mul = field.add, field.mul
    for k, v in source.items():
        c = add(target.get(k, 0), mul(coef, v))
        if c:
            target[k] = c
        else:
            target.pop(k, None)
    return target


def scale(field: FieldSpec, vec: Vec, coef: int) -> Vec:
    if not coef:
        return {}
    return {k: field.mul(coef, v) for k, v in vec.items()}


def combine(field: FieldSpec, *terms: tuple[int, Vec]) -> Vec:
    """Linear combination sum(c * v)."""
    out: Vec = {}
    for coef, vec in terms:
        axpy(field, out, coef, vec)
    return out


def sub(field: FieldSpec, a: Vec, b: Vec) -> Vec:
    out = dict(a)
    return axpy(field, out, field.neg(1), b)


class EchelonBasis:
    """Incremental RREF of a growing set of sparse vectors.

    With ``track=True`` every stored row remembers which inserted vectors it is a
    combination of; insertions that reduce to zero are recorded in ``relations``
    (the kernel of "tag -> inserted vector").
    """

    def __init__(self, field: FieldSpec, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict[Hashable, Vec] = {}
        self.combos: dict[Hashable, Vec] = {}
        self.nonzero_columns: dict[Hashable, set] = defaultdict(set)
        self.relations: list[Vec] = []

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows)

    def _eliminate(self, vec: Vec, combo: Vec | None) -> None:
        field = self.field
        for j in [j for j in vec if j in self.rows]:
            c = vec.get(j)
            if not c:
                continue
            neg = field.neg(c)
            axpy(field, vec, neg, self.rows[j])
            if combo is not None:
                axpy(field, combo, neg, self.combos[j])

    def reduce(self, vec: Vec) -> Vec:
        """Remainder of ``vec`` modulo the stored span."""
        out = {k: v for k, v in vec.items() if v}
        self._eliminate(out, None)
        return out

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def express(self, vec: Vec) -> Vec | None:
        """Coefficients of ``vec`` over the inserted tags, or None outside the span."""
        if not self.track:
            raise ValueError("express() needs a tracking EchelonBasis")
        rest = {k: v for k, v in vec.items() if v}
        combo: Vec = {}
        field = self.field
        for j in [j for j in rest if j in self.rows]:
            c = rest.get(j)
            if not c:
                continue
            axpy(field, rest, field.neg(c), self.rows[j])
            axpy(field, combo, c, self.combos[j])
        return None if rest else combo

    def add(self, vec: Vec, tag: Hashable = None) -> bool:
        """Insert a vector; True when it enlarged the span."""
        field = self.field
        row = {k: v for k, v in vec.items() if v}
        combo = {tag: 1} if self.track else None
        self._eliminate(row, combo)
        if not row:
            if self.track and combo:
                self.relations.append(combo)
            return False

        j = min(row)
        inv = field.inv(row[j])
        if inv != 1:
            row = scale(field, row, inv)
            if combo is not None:
                combo = scale(field, combo, inv)

        for k in self.nonzero_columns.pop(j, set()):
            rk = self.rows[k]
            c = rk.get(j)
            if not c:
                continue
            neg = field.neg(c)
            for col, v in row.items():
                new = field.add(rk.get(col, 0), field.mul(neg, v))
                if new:
                    if col not in rk and col != k:
                        self.nonzero_columns[col].add(k)
                    rk[col] = new
                else:
                    rk.pop(col, None)
                    if col != k:
                        self.nonzero_columns[col].discard(k)
            if self.track:
                axpy(field, self.combos[k], neg, combo)

        self.rows[j] = row
        if combo is not None:
            self.combos[j] = combo
        for col in row:
            if col != j:
                self.nonzero_columns[col].add(j)
        return True

    def extend(self, vecs: Iterable[Vec]) -> int:
        """Insert many vectors; returns how many were independent."""
        return sum(1 for v in vecs if self.add(v))

    def basis(self) -> list[Vec]:
        return [dict(self.rows[j]) for j in self.pivots]


def rank(field: FieldSpec, vecs: Iterable[Vec]) -> int:
    basis = EchelonBasis(field)
    basis.extend(vecs)
    return basis.rank


def kernel(field: FieldSpec, images: list[Vec]) -> list[Vec]:
    """Kernel of the map e_i -> images[i], as combinations over indices."""
    basis = EchelonBasis(field, track=True)
    for i, img in enumerate(images):
        basis.add(img, tag=i)
    return basis.relations


def same_span(field: FieldSpec, a: list[Vec], b: list[Vec]) -> bool:
    left = EchelonBasis(field)
    left.extend(a)
    if not all(left.contains(v) for v in b):
        return False
    right = EchelonBasis(field)
    right.extend(b)
    return right.rank == left.rank


# ── Dense helpers (galois) ──

def solve_dense(field: FieldSpec, matrix: list[list[int]], rhs: list[int]) -> list[int]:
    """Solve A x = b over the field; raises numpy.linalg.LinAlgError when A is singular."""
    gf = field.galois
    a = gf(np.array(matrix, dtype=np.int64))
    b = gf(np.array(rhs, dtype=np.int64))
    x = np.linalg.solve(a, b)
    return [int(v) for v in x]


def dense_rank(field: FieldSpec, matrix: list[list[int]]) -> int:
    if not matrix or not matrix[0]:
        return 0
    gf = field.galois
    return int(np.linalg.matrix_rank(gf(np.array(matrix, dtype=np.int64))))
