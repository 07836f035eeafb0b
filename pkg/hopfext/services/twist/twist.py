"""
Twisting by a bicharacter sigma on Γ = (Z/f)^theta.

Three levels: the functor F_sigma on realizations (g acts by vartheta(g, deg v) g),
the braided scalar twist x ._sigma y = sigma(deg x, deg y) xy of a Γ-graded
algebra, and the Hopf twist

    x ._sigma y = sigma(pi x_1, pi y_1) x_2 y_2 sigma^{-1}(pi x_3, pi y_3)

of a bosonization, with pi: R # kΓ -> kΓ the canonical projection.
"""
from __future__ import annotations

import numpy as np

from hopfext.api.schemas import CheckResult, TwistReport
from hopfext.core.config import settings
from hopfext.core.errors import PreconditionError, VerificationError
from hopfext.core.linalg import axpy, rank, scale
from hopfext.core.logger import log, log_verdict
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.table import TableAlgebra
from hopfext.services.algebra.words import ONE, Word
from hopfext.services.hopf.axioms import check_hopf
from hopfext.services.hopf.groups import AbelianGroup, Element
from hopfext.services.hopf.structure import HopfAlgebra, HopfStructure, TableHopf, table_hopf
from hopfext.services.hopf.tensor import coassoc_left
from hopfext.services.nichols.bosonization import braided_coproduct
from hopfext.services.nichols.braided import BraidedSpace, Realization, realize
from hopfext.services.nichols.data import BraidingData
from hopfext.services.nichols.presentation import nichols_algebra
from hopfext.services.twist.cocycle import GroupCocycle, cocycle_from_matrices


# ── realizations ──

def twist_functor(r: Realization, sigma: GroupCocycle) -> Realization:
    """F_sigma(V): same grading, g_k acts by vartheta(g_k, deg v) g_k."""
    if sigma.f != r.f or sigma.theta != r.rank:
        raise PreconditionError(f"cocycle lives on (Z/{sigma.f})^{sigma.theta}, realization on (Z/{r.f})^{r.rank}")
    field = r.space.field
    group = sigma.group
    form = sigma.alternating()
    actions = []
    for k in range(r.rank):
        gk = group.generator(k)
        actions.append({
            b: scale(field, vec, form.value(gk, group.generator(r.degree(b))))
            for b, vec in r.actions[k].items()
        })
    induced = Realization(r.space, r.f, actions).induced_braiding()
    space = BraidedSpace(field, list(r.space.labels), [list(c) for c in r.space.components], induced)
    return Realization(space, r.f, actions)


# ── braided twist ──

class TwistedAlgebra:
    """A Γ-graded FinBasisAlgebra with x ._sigma y = sigma(deg x, deg y) xy on homogeneous words."""

    def __init__(self, base: FinBasisAlgebra, sigma: GroupCocycle, degrees: list[Element]):
        if len(degrees) != base.ngens:
            raise PreconditionError(f"{len(degrees)} degrees for {base.ngens} generators")
        self.base = base
        self.sigma = sigma
        self.degrees = [tuple(v % sigma.f for v in d) for d in degrees]
        self.field = base.field
        self.group = sigma.group
        self._cache: dict = {}

    @property
    def basis(self) -> list[Word]:
        return self.base.basis

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def name(self) -> str:
        return f"{self.base.name}_sigma"

    def unit(self) -> dict:
        return {ONE: 1}

    def normal_form(self, vec: dict) -> dict:
        return self.base.normal_form(vec)

    def degree(self, word: Word) -> Element:
        out = self.group.identity
        for g in word:
            out = self.group.mul(out, self.degrees[g])
        return out

    def mul_basis(self, u: Word, v: Word) -> dict:
        key = (u, v)
        out = self._cache.get(key)
        if out is None:
            out = scale(self.field, self.base.mul_basis(u, v), self.sigma.value(self.degree(u), self.degree(v)))
            self._cache[key] = out
        return out

    def multiply(self, a: dict, b: dict) -> dict:
        field = self.field
        out: dict = {}
        for u, cu in a.items():
            for v, cv in b.items():
                axpy(field, out, field.mul(cu, cv), self.mul_basis(u, v))
        return out

    def word_value(self, word: Word) -> dict:
        """The twisted product of the letters of ``word``, left to right."""
        out = self.unit()
        for g in word:
            out = self.multiply(out, self.base.word_value((g,)))
        return out

    def evaluate(self, terms: dict) -> dict:
        out: dict = {}
        for w, c in terms.items():
            axpy(self.field, out, c, self.word_value(w))
        return out

    def hilbert_series(self) -> list[int]:
        return self.base.hilbert_series()

    def format(self, vec: dict) -> str:
        return self.base.format(vec)

    def format_word(self, w: Word) -> str:
        return self.base.format_word(w)

    def __repr__(self) -> str:
        return f"TwistedAlgebra({self.name}, dim={self.dim})"


def graded_degrees(alg: FinBasisAlgebra, theta: int) -> list[Element]:
    """Generator degrees of a Z^theta-graded presentation, read as elements of Γ."""
    pres = alg.presentation
    if not pres.graded or len(pres.generators[0].degree) != theta:
        raise PreconditionError(f"{alg.name} carries no Z^{theta} grading")
    return [tuple(g.degree) for g in pres.generators]


def twist_braided(r: FinBasisAlgebra, sigma: GroupCocycle, degrees: list[Element] | None = None) -> TwistedAlgebra:
    degrees = degrees if degrees is not None else graded_degrees(r, sigma.theta)
    return TwistedAlgebra(r, sigma, degrees)


# ── Hopf twist ──

def group_projection(h: HopfStructure, group: AbelianGroup) -> dict[Word, Element | None]:
    """pi on the basis: words in the grouplike letters go to their group element, the others to 0 (None)."""
    gens = sorted(h.grouplikes)
    if len(gens) != group.rank:
        raise PreconditionError(f"{h.name} has {len(gens)} grouplike generators, the group has rank {group.rank}")
    position = {g: k for k, g in enumerate(gens)}
    out = {}
    for w in h.basis:
        if all(g in position for g in w):
            elt = group.identity
            for g in w:
                elt = group.mul(elt, group.generator(position[g]))
            out[w] = elt
        else:
            out[w] = None
    return out


def table_projection(h: HopfStructure, group: AbelianGroup) -> dict[int, Element | None]:
    """group_projection reindexed like table_hopf(h)."""
    proj = group_projection(h, group)
    return {i: proj[w] for i, w in enumerate(h.basis)}


def _sigma_pi(sigma: GroupCocycle, proj: dict, a: dict, b: dict, inverse: bool = False) -> int:
    field = sigma.field
    value = sigma.inverse_value if inverse else sigma.value
    total = 0
    for u, cu in a.items():
        gu = proj.get(u)
        if gu is None:
            continue
        for v, cv in b.items():
            gv = proj.get(v)
            if gv is not None:
                total = field.add(total, field.mul(field.mul(cu, cv), value(gu, gv)))
    return total


def _legs(h: HopfAlgebra, proj: dict, key) -> list:
    """Terms of (Δ⊗id)Δ(key) whose outer legs survive pi."""
    triples = coassoc_left(h.field, h.coproduct_basis(key), h.coproduct_basis)
    return [(x1, x2, x3, c) for (x1, x2, x3), c in triples.items()
            if proj.get(x1) is not None and proj.get(x3) is not None]


def sweedler_product(h: HopfAlgebra, sigma: GroupCocycle, proj: dict, u, v, legs: dict | None = None) -> dict:
    """sigma(pi u_1, pi v_1) u_2 v_2 sigma^{-1}(pi u_3, pi v_3) on basis keys."""
    field = h.field
    lu = legs[u] if legs is not None else _legs(h, proj, u)
    lv = legs[v] if legs is not None else _legs(h, proj, v)
    out: dict = {}
    for u1, u2, u3, cu in lu:
        for v1, v2, v3, cv in lv:
            coef = field.mul(field.mul(cu, cv), field.mul(
                sigma.value(proj[u1], proj[v1]), sigma.inverse_value(proj[u3], proj[v3])))
            axpy(field, out, coef, h.algebra.mul_basis(u2, v2))
    return out


def twist_hopf(h: HopfAlgebra, sigma: GroupCocycle, projection: dict | None = None,
               verify: bool = True, name: str = "") -> TableHopf:
    """H^sigma on the basis of H: same coalgebra, twisted product, and

        S^sigma(x) = U(x_1) S(x_2) U^{-1}(x_3),  U(x) = sigma(x_1, S x_2),  U^{-1}(x) = sigma^{-1}(S x_1, x_2).
    """
    if isinstance(h, HopfStructure):
        projection = table_projection(h, sigma.group) if projection is None else projection
        h = table_hopf(h)
    elif projection is None:
        raise PreconditionError("a table Hopf algebra needs an explicit projection to kΓ")
    field = h.field
    keys = list(h.basis)
    legs = {k: _legs(h, projection, k) for k in keys}

    table = {}
    for u in keys:
        for v in keys:
            out = sweedler_product(h, sigma, projection, u, v, legs)
            if out:
                table[(u, v)] = out
    labels = list(getattr(h.algebra, "labels", [str(k) for k in keys]))
    algebra = TableAlgebra(field, labels, table, h.algebra.unit(), name=name or f"{h.name}^sigma")

    u_val, u_inv = {}, {}
    for k in keys:
        pu, pi = 0, 0
        for (a, b), c in h.coproduct_basis(k).items():
            pu = field.add(pu, field.mul(c, _sigma_pi(sigma, projection, {a: 1}, h.antipode_basis(b))))
            pi = field.add(pi, field.mul(c, _sigma_pi(sigma, projection, h.antipode_basis(a), {b: 1}, inverse=True)))
        u_val[k], u_inv[k] = pu, pi
    antipode = {}
    for k in keys:
        out: dict = {}
        for (x1, x2, x3), c in coassoc_left(field, h.coproduct_basis(k), h.coproduct_basis).items():
            coef = field.mul(c, field.mul(u_val[x1], u_inv[x3]))
            axpy(field, out, coef, h.antipode_basis(x2))
        antipode[k] = out

    twisted = TableHopf(algebra, {k: h.coproduct_basis(k) for k in keys}, [h.counit_basis(k) for k in keys], antipode)
    if verify:
        report = check_hopf(twisted)
        if not report.passed:
            raise VerificationError("twisted structure is not a Hopf algebra", witness=report.failures()[0].witness)
    log("TWIST", op="twist_hopf", algebra=algebra.name, dim=twisted.dim, trivial=sigma.is_trivial())
    return twisted


def letter_bidegrees(h: HopfStructure, group: AbelianGroup) -> dict[int, tuple[Element, Element]]:
    """(left, right) group legs of each letter: (deg v, 1) for v in R and (g, g) for a grouplike g."""
    proj = group_projection(h, group)
    position = {g: k for k, g in enumerate(sorted(h.grouplikes))}
    out = {}
    for i in range(h.algebra.ngens):
        if i in position:
            g = group.generator(position[i])
            out[i] = (g, g)
            continue
        for (a, b), _ in h.delta_gen[i].items():
            if b == (i,) and a != ONE and proj.get(a) is not None:
                out[i] = (proj[a], group.identity)
                break
        else:
            raise PreconditionError(f"{h.algebra.names[i]} is not skew-primitive over the group")
    return out


def twist_scalar_shortcut(h: HopfStructure, sigma: GroupCocycle, u: Word, v: Word,
                          bidegrees: dict | None = None) -> dict:
    """u ._sigma v = sigma(L u, L v) sigma^{-1}(R u, R v) uv with (L, R) summed over letters."""
    group = sigma.group
    bidegrees = bidegrees or letter_bidegrees(h, group)

    def legs(w: Word) -> tuple[Element, Element]:
        left, right = group.identity, group.identity
        for g in w:
            a, b = bidegrees[g]
            left, right = group.mul(left, a), group.mul(right, b)
        return left, right

    (lu, ru), (lv, rv) = legs(u), legs(v)
    field = h.field
    coef = field.mul(sigma.value(lu, lv), sigma.inverse_value(ru, rv))
    return scale(field, h.algebra.mul_basis(u, v), coef)


def check_shortcut(h: HopfStructure, sigma: GroupCocycle, samples: int | None = None,
                   seed: int | None = None) -> tuple[bool, str | None]:
    """The Sweedler formula and the scalar shortcut agree on all pairs of basis words, or on sampled pairs past the exhaustive cap."""
    group = sigma.group
    proj = group_projection(h, group)
    bidegrees = letter_bidegrees(h, group)
    basis = list(h.basis)
    rng = np.random.default_rng(settings.default_seed if seed is None else seed)
    count = samples or settings.random_samples
    picks = rng.integers(0, len(basis), size=(count, 2))
    if len(basis) <= settings.exhaustive_cap:
        pairs = [(w, w2) for w in basis for w2 in basis]
    else:
        pairs = [(w, w2) for w in h.generators() for w2 in h.generators()]
        pairs += [(basis[int(i)], basis[int(j)]) for i, j in picks]
    legs = {w: _legs(h, proj, w) for pair in pairs for w in pair}
    for u, v in pairs:
        general = sweedler_product(h, sigma, proj, u, v, legs)
        short = twist_scalar_shortcut(h, sigma, u, v, bidegrees)
        if general != short:
            fmt = h.algebra.format_word
            return False, f"twisted products of ({fmt(u)}, {fmt(v)}) disagree: {h.algebra.format(general)} vs {h.algebra.format(short)}"
    return True, None


# ── the isomorphism B(V(q, a)) ≅ B(V(1, a))_sigma ──

COALGEBRA_CHECK_DEGREE = 3


def twisted_coproduct(r_sigma: TwistedAlgebra, r_one: Realization, vec: dict) -> dict:
    """Δ_sigma(u) = sigma^{-1}(deg u_1, deg u_2) u_1 ⊗ u_2 on the coproduct of the untwisted algebra."""
    field = r_sigma.field
    sigma = r_sigma.sigma
    out: dict = {}
    for w, c in vec.items():
        for (a, b), cab in braided_coproduct(r_sigma.base, r_one, w).items():
            coef = field.mul(field.mul(c, cab), sigma.inverse_value(r_sigma.degree(a), r_sigma.degree(b)))
            axpy(field, out, coef, {(a, b): 1})
    return out


def coalgebra_check(r_q: FinBasisAlgebra, target: Realization, r_sigma: TwistedAlgebra,
                    r_one: Realization, max_length: int = COALGEBRA_CHECK_DEGREE) -> CheckResult:
    """The identity on generators intertwines Δ of B(V(q, a)) with Δ_sigma on normal words up to ``max_length``."""
    field = r_q.field
    image: dict = {}

    def phi(w: Word) -> dict:
        if w not in image:
            image[w] = r_sigma.word_value(w)
        return image[w]

    words = [w for w in r_q.basis if len(w) <= max_length]
    witness = None
    for w in words:
        lhs: dict = {}
        for (a, b), c in braided_coproduct(r_q, target, w).items():
            for u, cu in phi(a).items():
                for v, cv in phi(b).items():
                    axpy(field, lhs, field.mul(c, field.mul(cu, cv)), {(u, v): 1})
        rhs = twisted_coproduct(r_sigma, r_one, phi(w))
        if lhs != rhs:
            witness = f"Δ({r_q.format_word(w)}) does not match its twisted image"
            break
    return CheckResult.of("coalgebra", witness is None, witness=witness, words=len(words))


def verify_twist_iso(d: BraidingData, f: int | None = None, seed: int | None = None) -> TwistReport:
    """Twist B(V(1, a)) by sigma = sigma(1, q) and compare with B(V(q, a)) through the identity on generators."""
    field = d.field
    f = f if f is not None else d.minimal_f
    ones = tuple(tuple(1 for _ in range(d.theta)) for _ in range(d.theta))
    untwisted = d.with_q(ones)
    sigma = cocycle_from_matrices(field, ones, d.q, f)
    checks: list[CheckResult] = []

    ok, witness = sigma.check_identity(seed=seed)
    checks.append(CheckResult.of("cocycle", ok, witness=witness, table=sigma.format()))
    ok, witness = sigma.alternating().check(sigma.group, seed=seed)
    checks.append(CheckResult.of("alternating", ok, witness=witness))

    twisted_v = twist_functor(realize(untwisted, f), sigma)
    target_v = realize(d, f)
    witness = None
    for k in range(target_v.rank):
        if twisted_v.actions[k] != target_v.actions[k]:
            witness = f"g{k + 1} acts differently on F_sigma(V(1, a)) and V(q, a)"
            break
    if witness is None and twisted_v.space.braiding != target_v.space.braiding:
        witness = "twisted braiding differs from c_q"
    checks.append(CheckResult.of("yd_module", witness is None, witness=witness, f=f))

    r_one = nichols_algebra(untwisted)
    r_q = nichols_algebra(d)
    r_sigma = twist_braided(r_one, sigma)
    names = r_q.names
    witness = None
    relations = r_q.presentation.relations
    for rel in relations:
        value = r_sigma.evaluate(rel.terms)
        if value:
            witness = f"{rel.format(names)} maps to {r_sigma.format(value)}"
            break
    checks.append(CheckResult.of("relations", witness is None, witness=witness, relations=len(relations)))

    image_rank = rank(field, (r_sigma.word_value(w) for w in r_q.basis))
    checks.append(CheckResult.of(
        "bijective", image_rank == r_q.dim == r_one.dim,
        witness=f"image rank {image_rank}, dims {r_q.dim}/{r_one.dim}",
    ))
    checks.append(coalgebra_check(r_q, target_v, r_sigma, realize(untwisted, f)))
    h_one, h_q = r_one.hilbert_series(), r_q.hilbert_series()
    checks.append(CheckResult.of("hilbert", h_one == h_q, witness=f"{h_one} vs {h_q}"))

    report = TwistReport(
        subject=f"B(V(q,a)) ≅ B(V(1,a))_sigma [{d.describe()}]",
        checks=checks,
        hilbert_original=h_one,
        hilbert_twisted=h_q,
        dimensions={"original": r_one.dim, "twisted": r_q.dim, "f": f},
    )
    log_verdict("twist", report.verdict.value, dims=f"{r_one.dim}/{r_q.dim}", f=f)
    return report
