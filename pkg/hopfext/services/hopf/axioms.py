"""Verification of the bialgebra and Hopf axioms."""
from __future__ import annotations

from hopfext.api.schemas import CheckResult, HopfReport
from hopfext.core.config import settings
from hopfext.core.enums import CheckMode
from hopfext.core.errors import BudgetError
from hopfext.core.linalg import axpy
from hopfext.core.logger import log_verdict
from hopfext.services.hopf.structure import HopfAlgebra, HopfStructure, TableHopf
from hopfext.services.hopf.tensor import coassoc_left, coassoc_right, pure, tensor_multiply


# ── single-element identities ──

def coassociativity_defect(h: HopfAlgebra, key) -> dict:
    field = h.field
    delta = h.coproduct_basis(key)
    left = coassoc_left(field, delta, h.coproduct_basis)
    right = coassoc_right(field, delta, h.coproduct_basis)
    return axpy(field, left, field.neg(1), right)


def counit_defects(h: HopfAlgebra, key) -> tuple[dict, dict]:
    field = h.field
    delta = h.coproduct_basis(key)
    target = h.algebra.normal_form({key: 1})
    left, right = {}, {}
    for (u, v), c in delta.items():
        axpy(field, left, field.mul(c, h.counit_basis(u)), {v: 1})
        axpy(field, right, field.mul(c, h.counit_basis(v)), {u: 1})
    neg = field.neg(1)
    return axpy(field, left, neg, target), axpy(field, right, neg, target)


def antipode_defects(h: HopfAlgebra, key) -> tuple[dict, dict]:
    field = h.field
    alg = h.algebra
    delta = h.coproduct_basis(key)
    target = {k: field.mul(h.counit_basis(key), c) for k, c in alg.unit().items()}
    left, right = {}, {}
    for (u, v), c in delta.items():
        axpy(field, left, c, alg.multiply(h.antipode_basis(u), {v: 1}))
        axpy(field, right, c, alg.multiply({u: 1}, h.antipode_basis(v)))
    neg = field.neg(1)
    return axpy(field, left, neg, target), axpy(field, right, neg, target)


def multiplicativity_defects(h: HopfAlgebra, u, v) -> tuple[dict, int, dict]:
    """Δ(uv) - Δ(u)Δ(v), ε(uv) - ε(u)ε(v), S(uv) - S(v)S(u) for basis keys u, v."""
    field = h.field
    alg = h.algebra
    prod = alg.mul_basis(u, v)
    delta = h.coproduct(prod)
    axpy(field, delta, field.neg(1), tensor_multiply(field, alg, alg, h.coproduct_basis(u), h.coproduct_basis(v)))
    eps = field.sub(h.counit(prod), field.mul(h.counit_basis(u), h.counit_basis(v)))
    anti = h.antipode(prod)
    axpy(field, anti, field.neg(1), alg.multiply(h.antipode_basis(v), h.antipode_basis(u)))
    return delta, eps, anti


# ── report assembly ──

def _first(items, test, fmt) -> str | None:
    for item in items:
        if not test(item):
            return fmt(item)
    return None


def _well_defined(h: HopfStructure) -> CheckResult:
    field = h.field
    names = h.algebra.names
    pres = h.presentation
    for rel in pres.relations:
        delta, antipode, eps = {}, {}, 0
        for w, c in rel.terms.items():
            axpy(field, delta, c, h.coproduct_basis(w))
            axpy(field, antipode, c, h.antipode_basis(w))
            eps = field.add(eps, field.mul(c, h.counit_basis(w)))
        failed = [name for name, bad in (("Δ", delta), ("S", antipode), ("ε", eps)) if bad]
        if failed:
            return CheckResult.of(
                "well_defined", False,
                witness=f"{'/'.join(failed)} does not vanish on relation {rel.format(names, pres.order)}",
            )
    return CheckResult.of("well_defined", True, relations=len(pres.relations))


def _grouplikes(h: HopfStructure) -> CheckResult:
    alg = h.algebra
    for g in sorted(h.grouplikes):
        word = (g,)
        ok = (
            h.coproduct_basis(word) == {(word, word): 1}
            and h.counit_basis(word) == 1
            and alg.multiply(h.antipode_basis(word), {word: 1}) == alg.unit()
        )
        if not ok:
            return CheckResult.of("grouplikes", False, witness=f"{alg.names[g]} is not grouplike with S(g) = g^-1")
    return CheckResult.of("grouplikes", True, count=len(h.grouplikes))


def _axiom_checks(h: HopfAlgebra, keys: list) -> list[CheckResult]:
    fmt = h.algebra.format_word
    coassoc = _first(keys, lambda k: not coassociativity_defect(h, k), fmt)

    def counit_ok(k):
        left, right = counit_defects(h, k)
        return not left and not right

    def antipode_ok(k):
        left, right = antipode_defects(h, k)
        return not left and not right

    counit = _first(keys, counit_ok, fmt)
    antipode = _first(keys, antipode_ok, fmt)
    return [
        CheckResult.of("coassociativity", coassoc is None, witness=coassoc, checked=len(keys)),
        CheckResult.of("counit", counit is None, witness=counit, checked=len(keys)),
        CheckResult.of("antipode", antipode is None, witness=antipode, checked=len(keys)),
    ]


def _multiplicativity(h: HopfAlgebra) -> CheckResult:
    fmt = h.algebra.format_word
    field = h.field
    alg = h.algebra
    unit = alg.unit()
    if h.coproduct(unit) != pure(field, unit, unit) or h.counit(unit) != 1:
        return CheckResult.of("multiplicative", False, witness="Δ(1) ≠ 1⊗1 or ε(1) ≠ 1")
    for u in h.basis:
        for v in h.basis:
            delta, eps, anti = multiplicativity_defects(h, u, v)
            if delta or eps or anti:
                which = "Δ" if delta else ("ε" if eps else "S")
                return CheckResult.of("multiplicative", False, witness=f"{which} fails on ({fmt(u)}, {fmt(v)})")
    return CheckResult.of("multiplicative", True, pairs=h.dim ** 2)


def check_hopf(h: HopfAlgebra, mode: CheckMode | None = None) -> HopfReport:
    """Well-definedness, coassociativity, counit and antipode axioms.

    Generator mode checks the axioms on generators plus relation preservation;
    exhaustive mode checks every basis element and every pair of basis elements.
    """
    if mode is None:
        mode = CheckMode.EXHAUSTIVE if isinstance(h, TableHopf) else CheckMode.GENERATORS
    if mode == CheckMode.EXHAUSTIVE and h.dim > max(settings.exhaustive_cap, settings.dual_cap if isinstance(h, TableHopf) else 0):
        raise BudgetError(f"exhaustive Hopf check capped at dim {settings.exhaustive_cap}, got {h.dim}")

    checks: list[CheckResult] = []
    if isinstance(h, HopfStructure):
        checks.append(_well_defined(h))
        checks.append(_grouplikes(h))
        keys = h.generators() if mode == CheckMode.GENERATORS else list(h.basis)
    else:
        keys = list(h.basis)
    checks.extend(_axiom_checks(h, keys))
    if mode == CheckMode.EXHAUSTIVE:
        checks.append(_multiplicativity(h))

    report = HopfReport(subject=h.name or repr(h), dimension=h.dim, mode=mode, checks=checks)
    log_verdict("hopf", report.verdict.value, algebra=report.subject, dim=h.dim, mode=mode.value)
    return report
