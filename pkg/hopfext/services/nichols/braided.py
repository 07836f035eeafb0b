"""Braided vector spaces, the braid equation, and realizations over (Z/f)^theta."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from hopfext.api.schemas import CheckResult, VerificationReport
from hopfext.core.errors import PreconditionError, VerificationError
from hopfext.core.field import FieldSpec
from hopfext.core.linalg import axpy, dense_rank
from hopfext.core.logger import log_verdict
from hopfext.services.nichols.data import AbTriple, BraidingData, ab_triple_of

Pair = tuple[int, int]


@dataclass
class BraidedSpace:
    """Basis ``labels``; ``braiding[(i, j)]`` is c(b_i ⊗ b_j) as {(k, l): coefficient}."""
    field: FieldSpec
    labels: list[str]
    components: list[list[int]]
    braiding: dict[Pair, dict[Pair, int]] = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def component_of(self, b: int) -> int:
        for i, comp in enumerate(self.components):
            if b in comp:
                return i
        raise KeyError(b)

    def apply(self, t: dict[Pair, int]) -> dict[Pair, int]:
        out: dict = {}
        for pair, c in t.items():
            axpy(self.field, out, c, self.braiding.get(pair, {}))
        return out

    def _apply_at(self, t: dict, pos: int) -> dict:
        """c acting on tensor slots (pos, pos + 1) of 3-tensors."""
        out: dict = {}
        for word, c in t.items():
            pair = (word[pos], word[pos + 1])
            for (k, l), v in self.braiding.get(pair, {}).items():
                new = word[:pos] + (k, l) + word[pos + 2:]
                axpy(self.field, out, self.field.mul(c, v), {new: 1})
        return out

    def matrix(self) -> list[list[int]]:
        n = self.dim
        pairs = [(i, j) for i in range(n) for j in range(n)]
        index = {pr: r for r, pr in enumerate(pairs)}
        rows = [[0] * len(pairs) for _ in pairs]
        for col, pr in enumerate(pairs):
            for target, c in self.braiding.get(pr, {}).items():
                rows[index[target]][col] = c
        return rows

    def is_invertible(self) -> bool:
        return dense_rank(self.field, self.matrix()) == self.dim ** 2

    def format_pair(self, pair: Pair) -> str:
        return f"{self.labels[pair[0]]}⊗{self.labels[pair[1]]}"

    def format_tensor(self, t: dict) -> str:
        if not t:
            return "0"
        return " + ".join(
            f"{self.field.format(c)}*" * (c != 1) + "⊗".join(self.labels[b] for b in key)
            for key, c in sorted(t.items())
        )


def check_braid_equation(space: BraidedSpace) -> tuple[bool, str | None]:
    """(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on every basis triple."""
    for triple in itertools.product(range(space.dim), repeat=3):
        t = {triple: 1}
        left = space._apply_at(space._apply_at(space._apply_at(t, 0), 1), 0)
        right = space._apply_at(space._apply_at(space._apply_at(t, 1), 0), 1)
        if left != right:
            labels = "⊗".join(space.labels[b] for b in triple)
            return False, f"braid equation fails on {labels}: {space.format_tensor(left)} vs {space.format_tensor(right)}"
    return True, None


def ab_triple_labels(triple: AbTriple) -> tuple[list[str], list[list[int]]]:
    labels, comps = [], []
    for i, n in enumerate(triple.n):
        comp = []
        for k in range(n):
            comp.append(len(labels))
            labels.append(f"x{i + 1}" if n == 1 else f"x{i + 1}_{k + 1}")
        comps.append(comp)
    return labels, comps


def _triple_action(triple: AbTriple, comps: list[list[int]], i: int, b: int, j: int) -> dict[int, int]:
    """q_ij (b + t_ij(b)) for b the l-th basis vector of V_j."""
    field = triple.field
    q = triple.q[i][j]
    l = comps[j].index(b)
    mat = triple.matrix(i, j)
    out = {b: q}
    for k in range(triple.n[j]):
        if mat[k][l]:
            axpy(field, out, field.mul(q, mat[k][l]), {comps[j][k]: 1})
    return out


def braided_from_ab_triple(
    triple: AbTriple, labels: list[str] | None = None, verify: bool = True,
) -> BraidedSpace:
    """c(x ⊗ y) = q_ij (y + t_ij(y)) ⊗ x for x in V_i, y in V_j."""
    default_labels, comps = ab_triple_labels(triple)
    space = BraidedSpace(triple.field, labels or default_labels, comps)
    for i, comp_i in enumerate(comps):
        for j, comp_j in enumerate(comps):
            for u in comp_i:
                for v in comp_j:
                    image = _triple_action(triple, comps, i, v, j)
                    space.braiding[(u, v)] = {(w, u): c for w, c in image.items()}
    if verify:
        ok, witness = check_braid_equation(space)
        if not ok:
            raise VerificationError("ab-triple does not give a braided vector space", witness=witness)
    return space


def braiding_labels(d: BraidingData) -> list[str]:
    """x, y for the Jordan plane; otherwise x1, y1, ..., xt, yt, x(t+1), ..., x(theta)."""
    if d.theta == 1 and d.t == 1:
        return ["x", "y"]
    labels = []
    for j in d.blocks:
        labels += [f"x{j + 1}", f"y{j + 1}"]
    labels += [f"x{h + 1}" for h in d.points]
    return labels


def braided_from_data(d: BraidingData) -> BraidedSpace:
    """The braided vector space V(q, a) with blocks V(1, 2) and points decorated by a."""
    triple = ab_triple_of(d)
    try:
        return braided_from_ab_triple(triple, labels=braiding_labels(d))
    except VerificationError as e:
        raise VerificationError(f"inconsistent data {d.describe()}", witness=e.witness) from e


# ── realizations ──

@dataclass
class Realization:
    """kΓ-YD structure for Γ = (Z/f)^theta: deg of V_i is g_i, ``actions[k][b]`` = g_k · b."""
    space: BraidedSpace
    f: int
    actions: list[dict[int, dict[int, int]]]

    @property
    def rank(self) -> int:
        return len(self.actions)

    def degree(self, b: int) -> int:
        """Index k of the group generator g_k = deg b."""
        return self.space.component_of(b)

    def act(self, k: int, vec: dict, times: int = 1) -> dict:
        field = self.space.field
        for _ in range(times):
            out: dict = {}
            for b, c in vec.items():
                axpy(field, out, c, self.actions[k][b])
            vec = out
        return vec

    def act_word(self, exponents, vec: dict) -> dict:
        for k, e in enumerate(exponents):
            if e:
                vec = self.act(k, vec, e)
        return vec

    def induced_braiding(self) -> dict[Pair, dict[Pair, int]]:
        """c(u ⊗ v) = (deg u · v) ⊗ u."""
        out = {}
        for u in range(self.space.dim):
            k = self.degree(u)
            for v in range(self.space.dim):
                out[(u, v)] = {(w, u): c for w, c in self.actions[k][v].items()}
        return out


def verify_realization(r: Realization) -> VerificationReport:
    space = r.space
    n = space.dim
    comp = [space.component_of(b) for b in range(n)]

    grading = None
    for k in range(r.rank):
        for b in range(n):
            if any(comp[w] != comp[b] for w in r.actions[k][b]):
                grading = f"g{k + 1} moves {space.labels[b]} out of its component"
                break
        if grading:
            break

    order = None
    for k in range(r.rank):
        for b in range(n):
            if r.act(k, {b: 1}, r.f) != {b: 1}:
                order = f"g{k + 1}^{r.f} does not fix {space.labels[b]}"
                break
        if order:
            break

    commute = None
    for k, l in itertools.combinations(range(r.rank), 2):
        for b in range(n):
            if r.act(k, r.act(l, {b: 1})) != r.act(l, r.act(k, {b: 1})):
                commute = f"g{k + 1}, g{l + 1} do not commute on {space.labels[b]}"
                break
        if commute:
            break

    induced = r.induced_braiding()
    braiding = None
    for pair in sorted(set(induced) | set(space.braiding)):
        if induced.get(pair, {}) != space.braiding.get(pair, {}):
            braiding = f"induced braiding differs on {space.format_pair(pair)}"
            break

    report = VerificationReport(
        subject=f"realization f={r.f}",
        checks=[
            CheckResult.of("grading", grading is None, witness=grading),
            CheckResult.of("group_order", order is None, witness=order, f=r.f),
            CheckResult.of("commuting_action", commute is None, witness=commute),
            CheckResult.of("induced_braiding", braiding is None, witness=braiding, entries=n * n),
        ],
    )
    log_verdict("realization", report.verdict.value, f=r.f, dim=n)
    return report


def realize_ab_triple(triple: AbTriple, f: int, space: BraidedSpace | None = None) -> Realization:
    """g_i acts on V_j by q_ij(id + t_ij); deg V_i = g_i."""
    space = space or braided_from_ab_triple(triple)
    comps = space.components
    actions = []
    for i in range(triple.rank):
        act = {}
        for j, comp in enumerate(comps):
            for b in comp:
                act[b] = _triple_action(triple, comps, i, b, j)
        actions.append(act)
    r = Realization(space, f, actions)
    report = verify_realization(r)
    if not report.passed:
        failure = report.failures()[0]
        raise PreconditionError(f"f={f} does not realize the ab-triple: {failure.witness}")
    return r


def realize(d: BraidingData, f: int | None = None) -> Realization:
    """Realization over (Z/f)^theta; f must be a multiple of p * lcm(ord q_ij)."""
    f = f if f is not None else d.minimal_f
    if f <= 0 or f % d.minimal_f:
        raise PreconditionError(f"f={f} must be a multiple of p*d = {d.minimal_f}")
    return realize_ab_triple(ab_triple_of(d), f, space=braided_from_data(d))
