"""Restricted enveloping algebras u(L) as Hopf algebras with primitive generators."""
from __future__ import annotations

from hopfext.core.errors import VerificationError
from hopfext.core.logger import log
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.presentation import Presentation, make_presentation
from hopfext.services.hopf.structure import HopfStructure
from hopfext.services.lie.restricted import RestrictedLie, verify_restricted


def _linear(lie: RestrictedLie, vec: dict) -> NcPolynomial:
    return NcPolynomial(lie.field, {(k,): c for k, c in vec.items()})


def enveloping_presentation(lie: RestrictedLie, degree_bound: int | None = None) -> Presentation:
    """Generators = basis of L; relations uv - vu - [u, v] and u^p - u^[p]."""
    field = lie.field
    p = lie.p
    letters = [NcPolynomial.letter(field, i) for i in range(lie.dim)]
    rels = []
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            rels.append(letters[j] * letters[i] - letters[i] * letters[j] + _linear(lie, lie.bracket_basis(i, j)))
    for i in range(lie.dim):
        rels.append(letters[i] ** p - _linear(lie, lie.p_map.get(i, {})))
    return make_presentation(
        field, lie.names, rels,
        expected_dimension=p ** lie.dim,
        degree_bound=degree_bound or (p - 1) * lie.dim + p + 2,
        name=f"u({lie.name})" if lie.name else "u(L)",
    )


def restricted_enveloping(lie: RestrictedLie, degree_bound: int | None = None, verify: bool = True) -> HopfStructure:
    """u(L): Δ(u) = u⊗1 + 1⊗u, ε(u) = 0, S(u) = -u."""
    if verify:
        report = verify_restricted(lie)
        if not report.passed:
            raise VerificationError(f"{lie.name or 'L'} is not restricted", witness=report.failures()[0].witness)
    pres = enveloping_presentation(lie, degree_bound)
    alg = FinBasisAlgebra.build(pres)
    neg = lie.field.neg(1)
    delta = {i: {((i,), ()): 1, ((), (i,)): 1} for i in range(lie.dim)}
    counit = {i: 0 for i in range(lie.dim)}
    antipode = {i: {(i,): neg} for i in range(lie.dim)}
    h = HopfStructure(alg, delta, counit, antipode, grouplikes=set())
    log("LIE", op="enveloping", algebra=pres.name, dim=alg.dim, expected=pres.expected_dimension)
    return h


def lie_element(h: HopfStructure, vec: dict) -> dict:
    """Image of a Lie element in u(L) (basis index k is the generator word (k,))."""
    return h.algebra.normal_form({(k,): c for k, c in vec.items()})
