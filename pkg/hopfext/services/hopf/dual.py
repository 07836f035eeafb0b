"""Dual Hopf algebra H* on the dual basis."""
from __future__ import annotations

from hopfext.core.config import settings
from hopfext.core.errors import BudgetError
from hopfext.core.logger import log
from hopfext.services.algebra.table import TableAlgebra
from hopfext.services.hopf.structure import HopfAlgebra, TableHopf, table_hopf


def _add(field, vec: dict, key, c: int) -> None:
    new = field.add(vec.get(key, 0), c)
    if new:
        vec[key] = new
    else:
        vec.pop(key, None)


def dual_hopf(h: HopfAlgebra) -> TableHopf:
    """Transpose every structure map: m* = Δ^T, Δ* = m^T, u* = ε, ε* = u, S* = S^T."""
    if h.dim > settings.dual_cap:
        raise BudgetError(f"dual capped at dim {settings.dual_cap}, got {h.dim}")
    t = h if isinstance(h, TableHopf) else table_hopf(h)
    field = t.field
    alg = t.algebra
    n = t.dim

    table: dict = {}
    for k in range(n):
        for (i, j), c in t.coproduct_basis(k).items():
            _add(field, table.setdefault((i, j), {}), k, c)
    table = {ij: vec for ij, vec in table.items() if vec}

    delta: dict = {k: {} for k in range(n)}
    for i in range(n):
        for j in range(n):
            for k, c in alg.mul_basis(i, j).items():
                _add(field, delta[k], (i, j), c)

    unit = {k: t.counit_basis(k) for k in range(n) if t.counit_basis(k)}
    one = alg.unit()
    counit = [one.get(k, 0) for k in range(n)]

    antipode: dict = {k: {} for k in range(n)}
    for i in range(n):
        for k, c in t.antipode_basis(i).items():
            antipode[k][i] = c

    labels = [f"{label}*" for label in alg.labels]
    name = f"{alg.name}*" if alg.name else "dual"
    log("TASK", op="dual", algebra=alg.name or None, dim=n)
    return TableHopf(TableAlgebra(field, labels, table, unit, name=name), delta, counit, antipode)
