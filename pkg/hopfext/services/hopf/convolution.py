"""Convolution products Hom(C, A) and convolution inverses."""
from __future__ import annotations

import numpy as np

from hopfext.core.config import settings
from hopfext.core.errors import BudgetError, NotInvertibleError
from hopfext.core.linalg import axpy, solve_dense
from hopfext.core.logger import log
from hopfext.services.hopf.maps import LinearMap, _algebra


def convolve(f: LinearMap, g: LinearMap, coalgebra) -> LinearMap:
    """(f * g)(c) = f(c1) g(c2)."""
    target = _algebra(f.target)
    field = target.field

    def rule(c):
        out: dict = {}
        for (c1, c2), coef in coalgebra.coproduct_basis(c).items():
            axpy(field, out, coef, target.multiply(f.apply_basis(c1), g.apply_basis(c2)))
        return out

    return LinearMap(coalgebra, f.target, rule=rule, name=f"{f.name}*{g.name}")


def unit_counit(coalgebra, target) -> LinearMap:
    """The convolution identity c ↦ ε(c) 1_A."""
    alg = _algebra(target)
    field = alg.field

    def rule(c):
        e = coalgebra.counit_basis(c)
        return {k: field.mul(e, v) for k, v in alg.unit().items()} if e else {}

    return LinearMap(coalgebra, target, rule=rule, name="uε")


def is_convolution_inverse(f: LinearMap, g: LinearMap, coalgebra) -> bool:
    ident = unit_counit(coalgebra, f.target)
    left = convolve(f, g, coalgebra)
    right = convolve(g, f, coalgebra)
    return all(
        left.apply_basis(c) == ident.apply_basis(c) == right.apply_basis(c)
        for c in _algebra(coalgebra).basis
    )


def _solve_inverse(f: LinearMap, coalgebra) -> LinearMap:
    """Right inverse g from the linear system (f * g)(c) = ε(c) 1; then checked on the left."""
    target = _algebra(f.target)
    field = target.field
    c_basis = list(_algebra(coalgebra).basis)
    a_basis = list(target.basis)
    c_index = {c: i for i, c in enumerate(c_basis)}
    a_index = {a: i for i, a in enumerate(a_basis)}
    na = len(a_basis)
    n = len(c_basis) * na

    matrix = [[0] * n for _ in range(n)]
    rhs = [0] * n
    unit = target.unit()
    for ci, c in enumerate(c_basis):
        e = coalgebra.counit_basis(c)
        for a, v in unit.items():
            rhs[ci * na + a_index[a]] = field.mul(e, v)
        for (c1, c2), coef in coalgebra.coproduct_basis(c).items():
            fc1 = f.apply_basis(c1)
            if not fc1:
                continue
            col0 = c_index[c2] * na
            for ai, a in enumerate(a_basis):
                for b, v in target.multiply(fc1, {a: 1}).items():
                    row = matrix[ci * na + a_index[b]]
                    row[col0 + ai] = field.add(row[col0 + ai], field.mul(coef, v))
    try:
        x = solve_dense(field, matrix, rhs)
    except np.linalg.LinAlgError as e:
        raise NotInvertibleError(f"{f.name or 'map'} has no convolution inverse") from e

    columns = {
        c: {a: x[ci * na + ai] for ai, a in enumerate(a_basis) if x[ci * na + ai]}
        for ci, c in enumerate(c_basis)
    }
    g = LinearMap(coalgebra, f.target, columns=columns, name=f"{f.name}^-1")
    if not is_convolution_inverse(f, g, coalgebra):
        raise NotInvertibleError(f"{f.name or 'map'} has a one-sided convolution inverse only")
    return g


def convolution_inverse(f: LinearMap, coalgebra, candidate: LinearMap | None = None) -> LinearMap:
    """g with f * g = g * f = uε.

    Small problems are solved exactly. Above ``convolution_solve_cap`` unknowns a
    candidate is required (for example f∘S for an algebra map f out of a Hopf
    algebra) and is verified.
    """
    unknowns = _algebra(coalgebra).dim * _algebra(f.target).dim
    if unknowns <= settings.convolution_solve_cap:
        g = _solve_inverse(f, coalgebra)
        log("TASK", op="convolution_inverse", map=f.name, method="solve", unknowns=unknowns)
        return g
    if candidate is None:
        raise BudgetError(f"convolution inverse with {unknowns} unknowns needs a candidate")
    if not is_convolution_inverse(f, candidate, coalgebra):
        raise NotInvertibleError(f"candidate is not a convolution inverse of {f.name or 'map'}")
    log("TASK", op="convolution_inverse", map=f.name, method="candidate", unknowns=unknowns)
    return candidate


def antipode_candidate(f: LinearMap, source) -> LinearMap:
    """f∘S, the convolution inverse of an algebra map f out of a Hopf algebra."""
    return LinearMap(source, f.target, rule=lambda c: f.apply(source.antipode_basis(c)), name=f"{f.name}∘S")
