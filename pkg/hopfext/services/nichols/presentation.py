"""
Presentation of the Nichols algebra B(V(q, a)).

Relations, for blocks j != k and points h, l:

    x_j^p, y_j^p, y_j x_j - x_j y_j + 1/2 x_j^2
    x_k x_j - q_kj x_j x_k,  x_k y_j - q_kj y_j x_k,  y_k y_j - q_kj y_j y_k
    x_j x_h - q_jh x_h x_j
    sch_{h, (1 + G_hj) e_j}                      (truncated braided adjoint)
    sch_{h,n}^p                                  (n in A_h)
    sch_{h,m} sch_{l,n} - p_{h,l;m,n} sch_{l,n} sch_{h,m}

where sch_{h,n} = (ad_c y_1)^{n_1} ... (ad_c y_t)^{n_t} x_h is expanded as
iterated q-commutators: sch = y_j sch~ - q sch~ y_j with j the first nonzero
index of n, n~ = n - e_j, and q = q_jh prod_{i >= j} q_ji^{n_i}.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.polynomial import NcPolynomial, commutator
from hopfext.services.algebra.presentation import Presentation, make_presentation
from hopfext.services.nichols.braided import braiding_labels
from hopfext.services.nichols.data import BraidingData, sch_scalar


def generator_index(d: BraidingData) -> tuple[dict[int, int], dict[int, int]]:
    """Generator positions of x_i (all i) and y_j (blocks), in the order x1 y1 x2 y2 ... x_theta."""
    xs, ys = {}, {}
    pos = 0
    for j in d.blocks:
        xs[j], ys[j] = pos, pos + 1
        pos += 2
    for h in d.points:
        xs[h] = pos
        pos += 1
    return xs, ys


def generator_degrees(d: BraidingData) -> list[tuple[int, ...]]:
    """Group degrees in Z^theta: deg x_i = e_i, deg y_j = e_j."""
    def e(i):
        return tuple(1 if k == i else 0 for k in range(d.theta))

    degrees = []
    for j in d.blocks:
        degrees += [e(j), e(j)]
    degrees += [e(h) for h in d.points]
    return degrees


def sch_polynomial(d: BraidingData, h: int, n) -> NcPolynomial:
    """sch_{h,n} as an element of the free algebra on x_i, y_j."""
    xs, ys = generator_index(d)
    field = d.field

    @lru_cache(maxsize=None)
    def build(vec: tuple[int, ...]) -> NcPolynomial:
        if not any(vec):
            return NcPolynomial.letter(field, xs[h])
        j = next(i for i, v in enumerate(vec) if v)
        q = d.q[j][h]
        for i in range(j, d.t):
            q = field.mul(q, field.pow(d.q[j][i], vec[i]))
        smaller = vec[:j] + (vec[j] - 1,) + vec[j + 1:]
        return commutator(NcPolynomial.letter(field, ys[j]), build(smaller), q)

    return build(tuple(n))


def nichols_degree_bound(d: BraidingData) -> int:
    """Past the top degree (p-1) * (sum of PBW degrees) of the quotient."""
    return max(2 * (d.p - 1) * d.pbw_count, (d.p - 1) * d.pbw_degree_sum) + 2


def nichols_relations(d: BraidingData) -> list[NcPolynomial]:
    field = d.field
    p = d.p
    xs, ys = generator_index(d)

    def x(i):
        return NcPolynomial.letter(field, xs[i])

    def y(j):
        return NcPolynomial.letter(field, ys[j])

    rels: list[NcPolynomial] = []
    for j in d.blocks:
        rels += [x(j) ** p, y(j) ** p, y(j) * x(j) - x(j) * y(j) + (x(j) ** 2).scaled(field.half)]
    for k, j in itertools.permutations(d.blocks, 2):
        q = d.q[k][j]
        rels += [commutator(x(k), x(j), q), commutator(x(k), y(j), q)]
        if k > j:
            rels.append(commutator(y(k), y(j), q))
    for j in d.blocks:
        for h in d.points:
            rels.append(commutator(x(j), x(h), d.q[j][h]))
            top = tuple(1 + d.ghost_row(h)[i] if i == j else 0 for i in range(d.t))
            rels.append(sch_polynomial(d, h, top))

    schs = [(h, n, sch_polynomial(d, h, n)) for h in d.points for n in d.lattice(h)]
    for _, _, s in schs:
        rels.append(s ** p)
    for (h, m, s), (l, n, u) in itertools.combinations(schs, 2):
        rels.append(s * u - (u * s).scaled(sch_scalar(d, h, m, l, n)))
    return rels


def nichols_presentation(d: BraidingData, degree_bound: int | None = None) -> Presentation:
    names = braiding_labels(d)
    name = "jordan" if d.theta == 1 and d.t == 1 else f"nichols-t{d.t}-theta{d.theta}"
    return make_presentation(
        d.field,
        names,
        nichols_relations(d),
        degrees=generator_degrees(d),
        expected_dimension=d.nichols_dimension,
        degree_bound=degree_bound or nichols_degree_bound(d),
        name=name,
    )


def nichols_algebra(d: BraidingData, degree_bound: int | None = None) -> FinBasisAlgebra:
    return FinBasisAlgebra.build(nichols_presentation(d, degree_bound))
