"""
Restricted Lie algebras over F_{p^m}.

The p-operation is stored on the basis; every other value comes from
p-semilinearity, (k s)^[p] = k^p s^[p], and Jacobson's formula
(s + t)^[p] = s^[p] + t^[p] + sum_i s_i(s, t) / i.
"""
from __future__ import annotations

import itertools

import numpy as np

from hopfext.api.schemas import CheckResult, LieReport
from hopfext.core.config import settings
from hopfext.core.field import FieldSpec
from hopfext.core.linalg import axpy, scale
from hopfext.core.logger import log_verdict


class RestrictedLie:
    """Basis 0..n-1 named ``names``; ``bracket[(i, j)]`` and ``p_map[i]`` are sparse vectors."""

    def __init__(self, field: FieldSpec, names: list[str], bracket: dict, p_map: dict | None = None, name: str = ""):
        self.field = field
        self.names = list(names)
        self.bracket_table = {k: dict(v) for k, v in bracket.items() if v}
        self.p_map = {k: dict(v) for k, v in (p_map or {}).items() if v}
        self.name = name

    @classmethod
    def from_table(cls, field: FieldSpec, names: list[str], table: dict, p_map: dict | None = None, name: str = ""):
        """Fill [e_j, e_i] = -[e_i, e_j] from entries given for i < j."""
        bracket = {}
        for (i, j), vec in table.items():
            bracket[(i, j)] = dict(vec)
            bracket[(j, i)] = scale(field, vec, field.neg(1))
        return cls(field, names, bracket, p_map, name)

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def p(self) -> int:
        return self.field.p

    def basis_vector(self, i: int) -> dict:
        return {i: 1}

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.bracket_table.get((i, j), {})

    def bracket(self, u: dict, v: dict) -> dict:
        field = self.field
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                axpy(field, out, field.mul(a, b), self.bracket_basis(i, j))
        return out

    def ad_power(self, s: dict, v: dict, n: int) -> dict:
        for _ in range(n):
            if not v:
                break
            v = self.bracket(s, v)
        return v

    def is_abelian(self) -> bool:
        return not self.bracket_table

    def format(self, vec: dict) -> str:
        if not vec:
            return "0"
        return " + ".join(
            self.names[k] if c == 1 else f"{self.field.format(c)}*{self.names[k]}" for k, c in sorted(vec.items())
        )

    def random_element(self, rng: np.random.Generator) -> dict:
        values = rng.integers(0, self.field.order, size=self.dim)
        return {i: int(v) for i, v in enumerate(values) if v}

    def __repr__(self) -> str:
        return f"RestrictedLie({self.name or '?'}, dim={self.dim})"


def s_poly(lie: RestrictedLie, i: int, s: dict, t: dict) -> dict:
    """Coefficient of X^{i-1} in ad(X s + t)^{p-1}(s)."""
    p = lie.p
    if not 1 <= i <= p - 1:
        raise ValueError(f"s_i needs 1 <= i <= {p - 1}")
    return _s_coefficients(lie, s, t)[i - 1]


def _s_coefficients(lie: RestrictedLie, s: dict, t: dict) -> list[dict]:
    """All coefficients of X^0 .. X^{p-2} in ad(X s + t)^{p-1}(s)."""
    field = lie.field
    p = lie.p
    coeffs = [dict(s)]
    for _ in range(p - 1):
        nxt: list[dict] = [{} for _ in range(len(coeffs) + 1)]
        for k, w in enumerate(coeffs):
            if w:
                axpy(field, nxt[k], 1, lie.bracket(t, w))
                axpy(field, nxt[k + 1], 1, lie.bracket(s, w))
        coeffs = nxt
    return coeffs[: p - 1]


def jacobson_sum(lie: RestrictedLie, s: dict, t: dict) -> dict:
    """sum_{i=1}^{p-1} s_i(s, t) / i."""
    field = lie.field
    out: dict = {}
    for i, coef in enumerate(_s_coefficients(lie, s, t), start=1):
        axpy(field, out, field.inv(field.scalar(i)), coef)
    return out


def p_power(lie: RestrictedLie, s: dict) -> dict:
    """s^[p], extended from the basis by semilinearity and Jacobson's formula."""
    field = lie.field
    acc: dict = {}
    acc_p: dict = {}
    for i in sorted(s):
        c = s[i]
        term = {i: c}
        term_p = scale(field, lie.p_map.get(i, {}), field.pow(c, lie.p))
        cross = jacobson_sum(lie, acc, term) if acc else {}
        axpy(field, acc_p, 1, term_p)
        axpy(field, acc_p, 1, cross)
        axpy(field, acc, 1, term)
    return acc_p


# ── verification ──

def _antisymmetry(lie: RestrictedLie) -> CheckResult:
    field = lie.field
    for i in range(lie.dim):
        if lie.bracket_basis(i, i):
            return CheckResult.of("antisymmetry", False, witness=f"[{lie.names[i]}, {lie.names[i]}] != 0")
        for j in range(i + 1, lie.dim):
            total = axpy(field, dict(lie.bracket_basis(i, j)), 1, lie.bracket_basis(j, i))
            if total:
                return CheckResult.of("antisymmetry", False, witness=f"[{lie.names[i]}, {lie.names[j]}] + [{lie.names[j]}, {lie.names[i]}] != 0")
    return CheckResult.of("antisymmetry", True)


def jacobi_defect(lie: RestrictedLie, a: dict, b: dict, c: dict) -> dict:
    field = lie.field
    out = lie.bracket(a, lie.bracket(b, c))
    axpy(field, out, 1, lie.bracket(b, lie.bracket(c, a)))
    axpy(field, out, 1, lie.bracket(c, lie.bracket(a, b)))
    return out


def _jacobi(lie: RestrictedLie) -> CheckResult:
    for i, j, k in itertools.combinations(range(lie.dim), 3):
        if jacobi_defect(lie, {i: 1}, {j: 1}, {k: 1}):
            return CheckResult.of("jacobi", False, witness=f"({lie.names[i]}, {lie.names[j]}, {lie.names[k]})")
    return CheckResult.of("jacobi", True)


def ad_p_defect(lie: RestrictedLie, s: dict) -> tuple[int, dict] | None:
    """First basis v with ad(s^[p]) v != ad(s)^p v."""
    sp = p_power(lie, s)
    for v in range(lie.dim):
        lhs = lie.bracket(sp, {v: 1})
        rhs = lie.ad_power(s, {v: 1}, lie.p)
        if lhs != rhs:
            return v, axpy(lie.field, lhs, lie.field.neg(1), rhs)
    return None


def verify_restricted(lie: RestrictedLie, samples: int | None = None, seed: int | None = None) -> LieReport:
    """Antisymmetry, Jacobi, ad(s^[p]) = ad(s)^p, semilinearity and Jacobson's formula."""
    samples = settings.random_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    rng = np.random.default_rng(seed)
    field = lie.field
    checks = [_antisymmetry(lie), _jacobi(lie)]

    witness = None
    for i in range(lie.dim):
        bad = ad_p_defect(lie, {i: 1})
        if bad:
            v, _ = bad
            witness = f"ad({lie.names[i]}^[p]) and ad({lie.names[i]})^p differ on {lie.names[v]}"
            break
    checks.append(CheckResult.of("ad_p_basis", witness is None, witness=witness))

    ad_random, semilinear, jacobson = None, None, None
    for _ in range(samples):
        s, t = lie.random_element(rng), lie.random_element(rng)
        k = int(rng.integers(1, field.order))
        if ad_random is None and ad_p_defect(lie, s):
            ad_random = f"ad(s^[p]) != ad(s)^p for s = {lie.format(s)}"
        if semilinear is None and p_power(lie, scale(field, s, k)) != scale(field, p_power(lie, s), field.pow(k, lie.p)):
            semilinear = f"(k s)^[p] != k^p s^[p] for k = {field.format(k)}, s = {lie.format(s)}"
        if jacobson is None:
            lhs = p_power(lie, axpy(field, dict(s), 1, t))
            rhs = axpy(field, axpy(field, p_power(lie, s), 1, p_power(lie, t)), 1, jacobson_sum(lie, s, t))
            if lhs != rhs:
                jacobson = f"Jacobson's formula fails for s = {lie.format(s)}, t = {lie.format(t)}"
    checks += [
        CheckResult.of("ad_p_random", ad_random is None, witness=ad_random, samples=samples),
        CheckResult.of("semilinear", semilinear is None, witness=semilinear, samples=samples),
        CheckResult.of("jacobson", jacobson is None, witness=jacobson, samples=samples),
    ]
    report = LieReport(subject=lie.name or "lie", dimension=lie.dim, samples=samples, seed=seed, checks=checks)
    log_verdict("lie", report.verdict.value, algebra=report.subject, dim=lie.dim, samples=samples)
    return report
