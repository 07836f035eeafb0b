"""YD-pairs and YD-triples over group algebras of finite abelian groups."""
from __future__ import annotations

from hopfext.api.schemas import CheckResult, VerificationReport, YDTripleReport
from hopfext.core.errors import VerificationError
from hopfext.core.field import FieldSpec
from hopfext.core.logger import log_verdict
from hopfext.services.hopf.groups import AbelianGroup, Element
from hopfext.services.nichols.braided import BraidedSpace, check_braid_equation


def character_value(field: FieldSpec, chi: list[int], a: Element) -> int:
    """chi extended multiplicatively from its values on the group generators."""
    out = 1
    for c, e in zip(chi, a):
        out = field.mul(out, field.pow(c, e))
    return out


def derivation_value(field: FieldSpec, chi: list[int], eta: list[int], a: Element) -> int:
    """eta(a) for the (chi, chi)-derivation with eta(g_i) given: chi(a) sum_i a_i eta(g_i) / chi(g_i)."""
    total = 0
    for c, v, e in zip(chi, eta, a):
        if e and v:
            total = field.add(total, field.mul(field.scalar(e), field.div(v, c)))
    return field.mul(character_value(field, chi, a), total)


def _character_check(field: FieldSpec, group: AbelianGroup, chi: list[int]) -> CheckResult:
    for i, (c, n) in enumerate(zip(chi, group.orders)):
        if c == 0 or field.pow(c, n) != 1:
            return CheckResult.of("character", False, witness=f"chi(g{i + 1})^{n} != 1")
    return CheckResult.of("character", True)


def check_yd_pair(field: FieldSpec, group: AbelianGroup, g: Element, chi: list[int]) -> VerificationReport:
    """(g, chi) in G(kF) x Alg(kF, k); the compatibility condition is automatic for abelian F."""
    checks = [
        CheckResult.of("grouplike", len(g) == group.rank and all(0 <= e < n for e, n in zip(g, group.orders)),
                       witness=f"{g} is not an element of F"),
        _character_check(field, group, chi),
    ]
    report = VerificationReport(subject=f"yd-pair g={group.format(g)}", checks=checks)
    log_verdict("yd_pair", report.verdict.value, g=group.format(g))
    return report


def check_yd_triple(field: FieldSpec, group: AbelianGroup, g: Element, chi: list[int], eta: list[int]) -> YDTripleReport:
    """chi a character, eta a (chi, chi)-derivation, chi(g) = eta(g) = 1."""
    p = field.p
    checks = check_yd_pair(field, group, g, chi).checks

    bad = None
    for i, (c, v, n) in enumerate(zip(chi, eta, group.orders)):
        # eta(g_i^n) = n chi(g_i)^{n-1} eta(g_i) must equal eta(1) = 0
        if v and n % p:
            bad = f"eta(g{i + 1}^{n}) = {n}*chi^{n - 1}*eta(g{i + 1}) != 0 = eta(1)"
            break
    checks.append(CheckResult.of("derivation", bad is None, witness=bad))

    chi_g = character_value(field, chi, g)
    eta_g = derivation_value(field, chi, eta, g)
    checks.append(CheckResult.of("chi_g", chi_g == 1, witness=f"chi(g) = {field.format(chi_g)}"))
    checks.append(CheckResult.of("eta_g", eta_g == 1, witness=f"eta(g) = {field.format(eta_g)}"))

    order = group.element_order(g) if len(g) == group.rank else 0
    report = YDTripleReport(
        subject=f"yd-triple g={group.format(g)}", checks=checks,
        forces_p_divides_ord_g=bool(order) and order % p == 0,
    )
    log_verdict("yd_triple", report.verdict.value, g=group.format(g), ord_g=order)
    return report


def braided_from_yd_triple(field: FieldSpec, group: AbelianGroup, g: Element, chi: list[int], eta: list[int]) -> BraidedSpace:
    """V_g(chi, eta) = span{x, y}: h.x = chi(h) x, h.y = chi(h) y + eta(h) x, both of degree g."""
    c, e = character_value(field, chi, g), derivation_value(field, chi, eta, g)
    x, y = 0, 1
    space = BraidedSpace(field, ["x", "y"], [[x, y]])
    action = {x: {x: c}, y: {y: c, x: e} if e else {y: c}}
    for u in (x, y):
        for v in (x, y):
            space.braiding[(u, v)] = {(w, u): coef for w, coef in action[v].items()}
    ok, witness = check_braid_equation(space)
    if not ok:
        raise VerificationError("V_g(chi, eta) is not braided", witness=witness)
    return space
