"""Matched pairs of restricted Lie algebras and their double crossproducts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from hopfext.api.schemas import CheckResult, LieReport
from hopfext.core.errors import PreconditionError, VerificationError
from hopfext.core.linalg import EchelonBasis, axpy, scale
from hopfext.core.logger import log_verdict
from hopfext.services.lie.restricted import RestrictedLie, p_power, verify_restricted


@dataclass
class MatchedPairRL:
    """``left[(l, y)]`` = l ▷ y in g and ``right[(l, y)]`` = l ◁ y in l, on basis indices."""
    g: RestrictedLie
    l: RestrictedLie
    left: dict = dc_field(default_factory=dict)
    right: dict = dc_field(default_factory=dict)

    @property
    def field(self):
        return self.g.field

    def act_left(self, lv: dict, gv: dict) -> dict:
        field = self.field
        out: dict = {}
        for i, a in lv.items():
            for j, b in gv.items():
                axpy(field, out, field.mul(a, b), self.left.get((i, j), {}))
        return out

    def act_right(self, lv: dict, gv: dict) -> dict:
        field = self.field
        out: dict = {}
        for i, a in lv.items():
            for j, b in gv.items():
                axpy(field, out, field.mul(a, b), self.right.get((i, j), {}))
        return out


def _sub(field, a: dict, b: dict) -> dict:
    return axpy(field, dict(a), field.neg(1), b)


def _plus(field, *vecs: dict) -> dict:
    out: dict = {}
    for v in vecs:
        axpy(field, out, 1, v)
    return out


def lie_matched_pair_identities(mp: MatchedPairRL) -> list[CheckResult]:
    """Action axioms plus the two bracket compatibilities; no p-structure involved."""
    field = mp.field
    g, l = mp.g, mp.l
    gb = [{i: 1} for i in range(g.dim)]
    lb = [{i: 1} for i in range(l.dim)]

    left_module = None
    for (a, la), (b, lb_), (c, x) in itertools.product(enumerate(lb), enumerate(lb), enumerate(gb)):
        lhs = mp.act_left(l.bracket(la, lb_), x)
        rhs = _sub(field, mp.act_left(la, mp.act_left(lb_, x)), mp.act_left(lb_, mp.act_left(la, x)))
        if lhs != rhs:
            left_module = f"[{l.names[a]}, {l.names[b]}] ▷ {g.names[c]}"
            break

    right_module = None
    for (a, la), (b, x), (c, y) in itertools.product(enumerate(lb), enumerate(gb), enumerate(gb)):
        lhs = mp.act_right(la, g.bracket(x, y))
        rhs = _sub(field, mp.act_right(mp.act_right(la, x), y), mp.act_right(mp.act_right(la, y), x))
        if lhs != rhs:
            right_module = f"{l.names[a]} ◁ [{g.names[b]}, {g.names[c]}]"
            break

    bracket_right = None
    for (a, la), (b, m), (c, x) in itertools.product(enumerate(lb), enumerate(lb), enumerate(gb)):
        lhs = mp.act_right(l.bracket(la, m), x)
        rhs = _plus(
            field,
            l.bracket(mp.act_right(la, x), m),
            l.bracket(la, mp.act_right(m, x)),
            mp.act_right(la, mp.act_left(m, x)),
            scale(field, mp.act_right(m, mp.act_left(la, x)), field.neg(1)),
        )
        if lhs != rhs:
            bracket_right = f"[{l.names[a]}, {l.names[b]}] ◁ {g.names[c]}"
            break

    bracket_left = None
    for (a, la), (b, x), (c, y) in itertools.product(enumerate(lb), enumerate(gb), enumerate(gb)):
        lhs = mp.act_left(la, g.bracket(x, y))
        rhs = _plus(
            field,
            g.bracket(mp.act_left(la, x), y),
            g.bracket(x, mp.act_left(la, y)),
            mp.act_left(mp.act_right(la, x), y),
            scale(field, mp.act_left(mp.act_right(la, y), x), field.neg(1)),
        )
        if lhs != rhs:
            bracket_left = f"{l.names[a]} ▷ [{g.names[b]}, {g.names[c]}]"
            break

    return [
        CheckResult.of("left_module", left_module is None, witness=left_module),
        CheckResult.of("right_module", right_module is None, witness=right_module),
        CheckResult.of("bracket_right", bracket_right is None, witness=bracket_right),
        CheckResult.of("bracket_left", bracket_left is None, witness=bracket_left),
    ]


def _bicrossed_bracket(mp: MatchedPairRL) -> dict:
    """[(x, l), (y, m)] = ([x, y] + l ▷ y - m ▷ x, [l, m] + l ◁ y - m ◁ x) on the basis g ⊔ l."""
    field = mp.field
    g, l = mp.g, mp.l
    n = g.dim
    neg = field.neg(1)
    table: dict = {}
    for i, j in itertools.product(range(g.dim), repeat=2):
        table[(i, j)] = dict(g.bracket_basis(i, j))
    for i, j in itertools.product(range(l.dim), repeat=2):
        table[(n + i, n + j)] = {n + k: c for k, c in l.bracket_basis(i, j).items()}
    for a, y in itertools.product(range(l.dim), range(g.dim)):
        vec = dict(mp.left.get((a, y), {}))
        vec.update({n + k: c for k, c in mp.right.get((a, y), {}).items()})
        table[(n + a, y)] = vec
        table[(y, n + a)] = scale(field, vec, neg)
    return {k: v for k, v in table.items() if v}


def double_cross(mp: MatchedPairRL, verify: bool = True) -> RestrictedLie:
    """g ⋈ l with p-operation extending those of g and l."""
    n = mp.g.dim
    p_map = {i: dict(v) for i, v in mp.g.p_map.items()}
    p_map.update({n + i: {n + k: c for k, c in v.items()} for i, v in mp.l.p_map.items()})
    s = RestrictedLie(
        mp.field, mp.g.names + mp.l.names, _bicrossed_bracket(mp), p_map,
        name=f"{mp.g.name or 'g'}⋈{mp.l.name or 'l'}",
    )
    if verify:
        report = verify_restricted(s)
        if not report.passed:
            raise VerificationError("double crossproduct is not restricted", witness=report.failures()[0].witness)
    return s


def _ad_power_identity(s: RestrictedLie, first: range, second: range, tag: str) -> CheckResult:
    """ad(u^[p]) v = ad(u)^p v for u in ``first`` and v in ``second`` (basis indices of s).

    Checked inside the double cross sum s = g ⋈ l. Expanding [u, v] = u ▷ v + u ◁ v and
    iterating, ad(l)^p y is the sum over i of (ad l)^i (l ◁ (l^{p-i} ▷ y)) plus its ▷ part,
    so this identity is the compatibility l^[p] ◁ y = Σ_i (ad l)^i (l ◁ (l^{p-i} ▷ y)) and
    its mirror for x ◁ m^[p].
    """
    for u in first:
        up = p_power(s, {u: 1})
        for v in second:
            if s.bracket(up, {v: 1}) != s.ad_power({u: 1}, {v: 1}, s.p):
                return CheckResult.of(tag, False, witness=f"ad({s.names[u]}^[p]) {s.names[v]} != ad({s.names[u]})^p {s.names[v]}")
    return CheckResult.of(tag, True)


def _p_actions(mp: MatchedPairRL) -> list[CheckResult]:
    """l^[p] ▷ x = l^p ▷ x and l ◁ y^[p] = l ◁ y^p (iterated actions)."""
    g, l = mp.g, mp.l
    left = None
    for a, x in itertools.product(range(l.dim), range(g.dim)):
        lhs = mp.act_left(p_power(l, {a: 1}), {x: 1})
        rhs = {x: 1}
        for _ in range(l.p):
            rhs = mp.act_left({a: 1}, rhs)
        if lhs != rhs:
            left = f"{l.names[a]}^[p] ▷ {g.names[x]}"
            break
    right = None
    for a, y in itertools.product(range(l.dim), range(g.dim)):
        lhs = mp.act_right({a: 1}, p_power(g, {y: 1}))
        rhs = {a: 1}
        for _ in range(g.p):
            rhs = mp.act_right(rhs, {y: 1})
        if lhs != rhs:
            right = f"{l.names[a]} ◁ {g.names[y]}^[p]"
            break
    return [
        CheckResult.of("left_p_action", left is None, witness=left),
        CheckResult.of("right_p_action", right is None, witness=right),
    ]


def verify_matched_pair(mp: MatchedPairRL) -> LieReport:
    """Lie matched-pair identities, p-actions, and the two restricted compatibilities.

    The restricted compatibilities are checked in their operator form inside g ⋈ l:
    ad(l^[p]) y = ad(l)^p y and ad(y^[p]) l = ad(y)^p l.
    """
    checks = lie_matched_pair_identities(mp)
    checks += _p_actions(mp)
    if all(c.passed for c in checks):
        s = double_cross(mp, verify=False)
        n = mp.g.dim
        checks.append(_ad_power_identity(s, range(n, s.dim), range(n), "restricted_left"))
        checks.append(_ad_power_identity(s, range(n), range(n, s.dim), "restricted_right"))
    report = LieReport(subject=f"{mp.g.name or 'g'}, {mp.l.name or 'l'}", dimension=mp.g.dim + mp.l.dim, checks=checks)
    log_verdict("lie", report.verdict.value, pair=report.subject)
    return report


def _sub_lie(s: RestrictedLie, vectors: list[dict], names: list[str], name: str) -> RestrictedLie:
    """Restriction of s to span(vectors); raises if not a restricted subalgebra."""
    basis = EchelonBasis(s.field, track=True)
    for k, v in enumerate(vectors):
        if not basis.add(v, tag=k):
            raise PreconditionError(f"{name}: basis vectors are dependent")
    bracket, p_map = {}, {}
    for i, j in itertools.product(range(len(vectors)), repeat=2):
        combo = basis.express(s.bracket(vectors[i], vectors[j]))
        if combo is None:
            raise PreconditionError(f"{name} is not closed under the bracket")
        if combo:
            bracket[(i, j)] = combo
    for i, v in enumerate(vectors):
        combo = basis.express(p_power(s, v))
        if combo is None:
            raise PreconditionError(f"{name} is not closed under the p-operation")
        if combo:
            p_map[i] = combo
    return RestrictedLie(s.field, names, bracket, p_map, name=name)


def exact_factorization(s: RestrictedLie, g_basis: list[dict], l_basis: list[dict]) -> MatchedPairRL:
    """Recover ▷, ◁ from [l, y] = l ▷ y + l ◁ y when s = span(g_basis) ⊕ span(l_basis)."""
    if len(g_basis) + len(l_basis) != s.dim:
        raise PreconditionError("g and l do not add up to s")
    g = _sub_lie(s, g_basis, [f"g{i + 1}" for i in range(len(g_basis))], "g")
    l = _sub_lie(s, l_basis, [f"l{i + 1}" for i in range(len(l_basis))], "l")
    whole = EchelonBasis(s.field, track=True)
    for k, v in enumerate(g_basis):
        whole.add(v, tag=("g", k))
    for k, v in enumerate(l_basis):
        if not whole.add(v, tag=("l", k)):
            raise PreconditionError("g ∩ l != 0")
    left, right = {}, {}
    for a, y in itertools.product(range(len(l_basis)), range(len(g_basis))):
        combo = whole.express(s.bracket(l_basis[a], g_basis[y]))
        gpart = {k: c for (side, k), c in combo.items() if side == "g"}
        lpart = {k: c for (side, k), c in combo.items() if side == "l"}
        if gpart:
            left[(a, y)] = gpart
        if lpart:
            right[(a, y)] = lpart
    return MatchedPairRL(g, l, left, right)
