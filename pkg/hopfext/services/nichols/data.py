"""
Input data for the Nichols family: (q, a) data with ghosts, and ab-triples.

Indices are 0-based. Blocks are 0..t-1, points are t..theta-1; ``a`` and the
ghost matrix are indexed ``[h - t][j]`` for a point h and a block j.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import lcm

from hopfext.api.schemas import FamilyBlock
from hopfext.core.errors import PreconditionError
from hopfext.core.field import FieldSpec, root_of_unity

Matrix = tuple[tuple[int, ...], ...]


def ghost_from_a(a: int, p: int) -> int:
    """0 if a = 0, else the G in 1..p-1 with -G = 2a mod p."""
    a %= p
    if a == 0:
        return 0
    for g in range(1, p):
        if (-g - 2 * a) % p == 0:
            return g
    raise AssertionError("unreachable for odd p")


def a_from_ghost(ghost: int, p: int) -> int:
    """Inverse of ghost_from_a: a = -G/2 mod p."""
    return (-ghost * pow(2, -1, p)) % p


def ahz_lattice(ghost_row) -> list[tuple[int, ...]]:
    """All n with 0 <= n <= ghost_row componentwise, lexicographically ordered."""
    return [tuple(n) for n in itertools.product(*(range(g + 1) for g in ghost_row))]


@dataclass(frozen=True)
class BraidingData:
    """Data (q, a): t Jordan blocks and theta - t points."""
    field: FieldSpec
    t: int
    theta: int
    q: Matrix
    a: Matrix

    def __post_init__(self):
        field, n = self.field, self.theta
        if self.t < 0 or self.theta < max(self.t, 1):
            raise PreconditionError(f"need 0 <= t <= theta and theta >= 1, got t={self.t}, theta={self.theta}")
        if len(self.q) != n or any(len(row) != n for row in self.q):
            raise PreconditionError(f"q must be {n}x{n}")
        for i in range(n):
            if self.q[i][i] != 1:
                raise PreconditionError(f"q_{i + 1}{i + 1} must be 1")
            for j in range(i + 1, n):
                if field.mul(self.q[i][j], self.q[j][i]) != 1:
                    raise PreconditionError(f"q_{i + 1}{j + 1} q_{j + 1}{i + 1} != 1")
        if len(self.a) != n - self.t or any(len(row) != self.t for row in self.a):
            raise PreconditionError(f"a must be {n - self.t}x{self.t}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def blocks(self) -> range:
        return range(self.t)

    @property
    def points(self) -> range:
        return range(self.t, self.theta)

    @cached_property
    def ghost(self) -> Matrix:
        return tuple(tuple(ghost_from_a(v, self.p) for v in row) for row in self.a)

    def a_value(self, h: int, j: int) -> int:
        return self.a[h - self.t][j] % self.p

    def ghost_row(self, h: int) -> tuple[int, ...]:
        return self.ghost[h - self.t]

    def lattice(self, h: int) -> list[tuple[int, ...]]:
        return ahz_lattice(self.ghost_row(h))

    @property
    def pbw_count(self) -> int:
        return 2 * self.t + sum(len(self.lattice(h)) for h in self.points)

    @property
    def pbw_degree_sum(self) -> int:
        """Sum of total degrees of the PBW generators (x_j, y_j, and sch_{h,n} of degree 1 + |n|)."""
        return 2 * self.t + sum(1 + sum(n) for h in self.points for n in self.lattice(h))

    @property
    def nichols_dimension(self) -> int:
        return self.p ** self.pbw_count

    @property
    def root_order(self) -> int:
        """lcm of the multiplicative orders of all q_ij."""
        return lcm(*(self.field.element_order(v) for row in self.q for v in row))

    @property
    def minimal_f(self) -> int:
        return self.p * self.root_order

    def is_trivial_q(self) -> bool:
        return all(v == 1 for row in self.q for v in row)

    def with_q(self, q: Matrix) -> "BraidingData":
        return BraidingData(self.field, self.t, self.theta, tuple(map(tuple, q)), self.a)

    def describe(self) -> str:
        return f"t={self.t} theta={self.theta} ghost={[list(r) for r in self.ghost]} q_order={self.root_order}"


def braiding_data(field: FieldSpec, t: int, theta: int, q=None, a=None) -> BraidingData:
    """BraidingData with q defaulting to the all-ones matrix and a to zero."""
    q = q if q is not None else [[1] * theta for _ in range(theta)]
    a = a if a is not None else [[0] * t for _ in range(theta - t)]
    return BraidingData(field, t, theta, tuple(tuple(row) for row in q), tuple(tuple(v % field.p for v in row) for row in a))


def braiding_data_from_block(field: FieldSpec, block: FamilyBlock) -> BraidingData:
    """q entries in the block are exponents of a primitive ``root``-th root of unity."""
    zeta = root_of_unity(field, block.root)
    q = None
    if block.q is not None:
        q = [[field.pow(zeta, k % block.root) for k in row] for row in block.q]
    a = block.a or None
    return braiding_data(field, block.t, block.theta, q, a)


def laestrygonian(field: FieldSpec, ghost: int, q: int = 1) -> BraidingData:
    """One block and one point with the given ghost; q = q_12 (so q_21 = q^-1)."""
    a = a_from_ghost(ghost, field.p)
    return braiding_data(field, 1, 2, [[1, q], [field.inv(q), 1]], [[a]])


# ── gradings ──

def grading_form(d: BraidingData) -> Matrix:
    """Bilinear form p on Q = Z^{theta + t}, basis alpha_1..alpha_theta, beta_1..beta_t.

    p(alpha_i, alpha_j) = p(alpha_i, beta_j) = p(beta_i, alpha_j) = p(beta_i, beta_j) = q_ij.
    """
    idx = list(range(d.theta)) + list(range(d.t))
    return tuple(tuple(d.q[i][j] for j in idx) for i in idx)


def form_value(field: FieldSpec, form: Matrix, gamma, delta) -> int:
    out = 1
    for i, gi in enumerate(gamma):
        if not gi:
            continue
        for j, dj in enumerate(delta):
            if dj:
                out = field.mul(out, field.pow(form[i][j], gi * dj))
    return out


def sch_degree(d: BraidingData, h: int, n) -> tuple[int, ...]:
    """deg sch_{h,n} = alpha_h + sum n_k beta_k in Q."""
    deg = [0] * (d.theta + d.t)
    deg[h] = 1
    for k, nk in enumerate(n):
        deg[d.theta + k] += nk
    return tuple(deg)


def sch_scalar(d: BraidingData, h: int, m, ell: int, n) -> int:
    """The scalar p_{h,l;m,n} of the sch-commutation relations."""
    return form_value(d.field, grading_form(d), sch_degree(d, h, m), sch_degree(d, ell, n))


def is_quantum_linear(field: FieldSpec, form: Matrix) -> tuple[bool, str | None]:
    """p(g, d) p(d, g) = 1 for distinct basis vectors and p(g, g) = 1."""
    n = len(form)
    for i in range(n):
        if form[i][i] != 1:
            return False, f"p(e{i}, e{i}) = {field.format(form[i][i])}"
        for j in range(i + 1, n):
            if field.mul(form[i][j], form[j][i]) != 1:
                return False, f"p(e{i}, e{j}) p(e{j}, e{i}) != 1"
    return True, None


# ── ab-triples ──

@dataclass(frozen=True)
class AbTriple:
    """(n, q, t): block sizes, scalars, and t[(i, j)] in End k^{n_j} (t[(i, j)][k][l] = coefficient of x_{j,k} in t(x_{j,l}))."""
    field: FieldSpec
    n: tuple[int, ...]
    q: Matrix
    t: dict

    def __post_init__(self):
        theta = len(self.n)
        if any(v < 1 for v in self.n):
            raise PreconditionError("block dimensions must be positive")
        if not self.is_normalized():
            raise PreconditionError(f"block dimensions must be non-increasing, got {self.n}")
        if len(self.q) != theta or any(len(row) != theta for row in self.q):
            raise PreconditionError(f"q must be {theta}x{theta}")
        if any(v == 0 for row in self.q for v in row):
            raise PreconditionError("q entries must be invertible")
        for (i, j), mat in self.t.items():
            if len(mat) != self.n[j] or any(len(row) != self.n[j] for row in mat):
                raise PreconditionError(f"t_{i + 1}{j + 1} must be {self.n[j]}x{self.n[j]}")
            if self.n[j] == 1 and any(v for row in mat for v in row):
                raise PreconditionError(f"t_{i + 1}{j + 1} must vanish on a one-dimensional V_{j + 1}")
        for i, j, k in itertools.product(range(theta), repeat=3):
            a, b = self.matrix(i, k), self.matrix(j, k)
            if _matmul(self.field, a, b) != _matmul(self.field, b, a):
                raise PreconditionError(f"t_{i + 1}{k + 1} and t_{j + 1}{k + 1} do not commute")

    @property
    def rank(self) -> int:
        return len(self.n)

    def matrix(self, i: int, j: int) -> list[list[int]]:
        mat = self.t.get((i, j))
        if mat is None:
            return [[0] * self.n[j] for _ in range(self.n[j])]
        return [list(row) for row in mat]

    def is_normalized(self) -> bool:
        return list(self.n) == sorted(self.n, reverse=True)

    def is_nilpotent(self) -> bool:
        for (i, j), mat in self.t.items():
            power = [list(r) for r in mat]
            for _ in range(self.n[j]):
                power = _matmul(self.field, power, mat)
            if any(v for row in power for v in row):
                return False
        return True


def _matmul(field: FieldSpec, a, b) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                for j in range(n):
                    if b[k][j]:
                        out[i][j] = field.add(out[i][j], field.mul(a[i][k], b[k][j]))
    return out


def ab_triple_of(d: BraidingData) -> AbTriple:
    """Blocks of size 2 (basis x_j, y_j) then points of size 1; t_jj(y_j) = x_j, t_hj(y_j) = a_hj x_j."""
    n = tuple([2] * d.t + [1] * (d.theta - d.t))
    t = {}
    for j in d.blocks:
        t[(j, j)] = ((0, 1), (0, 0))
        for h in d.points:
            a = d.a_value(h, j)
            if a:
                t[(h, j)] = ((0, a), (0, 0))
    return AbTriple(d.field, n, d.q, t)
