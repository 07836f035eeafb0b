"""
Exact sequences k -> K -> H -> L -> k of Hopf algebras, cleaving maps and splittings.

Checks run in the order exact -> cleaving -> split; each later check assumes the
earlier ones passed. Above ``extension_exhaustive_cap`` the checks that are
multiplicative in nature run on generators and the purely linear identities run
on a seeded sample of basis words.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from hopfext.api.schemas import CheckResult, ExtensionReport
from hopfext.core.config import settings
from hopfext.core.enums import CheckMode, ExtensionLevel
from hopfext.core.errors import HopfextError, NotInvertibleError, VerificationError
from hopfext.core.linalg import EchelonBasis, axpy, scale, sub
from hopfext.core.logger import log_verdict
from hopfext.services.hopf.convolution import antipode_candidate, convolution_inverse
from hopfext.services.hopf.maps import (
    GeneratorMap, LinearMap, is_algebra_map, is_coalgebra_map, is_hopf_map,
)
from hopfext.services.hopf.structure import HopfAlgebra, HopfStructure
from hopfext.services.hopf.tensor import flip, pure, tensor_apply


@dataclass
class ExtensionCandidate:
    """K --iota--> H --pi--> L.

    ``preimages`` maps generator words of L to elements of H with pi(pre) = generator;
    it lets surjectivity be checked without a full rank computation.
    """
    K: HopfAlgebra
    H: HopfAlgebra
    L: HopfAlgebra
    iota: LinearMap
    pi: LinearMap
    preimages: dict = dc_field(default_factory=dict)
    name: str = ""

    @property
    def field(self):
        return self.H.field

    @property
    def dimensions(self) -> dict[str, int]:
        return {"K": self.K.dim, "H": self.H.dim, "L": self.L.dim}


@dataclass
class CleavingPair:
    """s: L -> H and r: H -> K, with their convolution inverses once computed."""
    s: LinearMap
    r: LinearMap
    s_inv: LinearMap | None = None
    r_inv: LinearMap | None = None


# ── helpers ──

def resolve_mode(e: ExtensionCandidate, mode: CheckMode | None = None) -> CheckMode:
    generator_ready = all(isinstance(h, HopfStructure) for h in (e.K, e.H, e.L))
    if mode == CheckMode.GENERATORS and generator_ready:
        return mode
    if mode is None and generator_ready and e.H.dim > settings.extension_exhaustive_cap:
        return CheckMode.GENERATORS
    return CheckMode.EXHAUSTIVE


def generator_vectors(h: HopfAlgebra) -> list[dict]:
    """Algebra generators as elements; every basis element for table-given algebras."""
    if isinstance(h, HopfStructure):
        return [h.algebra.normal_form({w: 1}) for w in h.generators()]
    return [{k: 1} for k in h.basis]


def generator_keys(h: HopfAlgebra) -> list:
    if isinstance(h, HopfStructure):
        return [w for w in h.generators() if w in h.algebra.index]
    return list(h.basis)


def sample_keys(h: HopfAlgebra, mode: CheckMode, seed: int | None = None) -> list:
    """All basis keys, or the unit, the generators and a seeded sample of basis keys."""
    basis = list(h.basis)
    if mode == CheckMode.EXHAUSTIVE or len(basis) <= settings.random_samples:
        return basis
    rng = np.random.default_rng(settings.default_seed if seed is None else seed)
    picks = rng.choice(len(basis), size=settings.random_samples, replace=False)
    chosen = {basis[0]} | set(generator_keys(h)) | {basis[int(i)] for i in picks}
    return [k for k in basis if k in chosen]


def _scalar_unit(h: HopfAlgebra, c: int) -> dict:
    return scale(h.field, h.unit(), c)


def _fmt(h: HopfAlgebra, key) -> str:
    return h.algebra.format_word(key)


def _image_basis(f: LinearMap, keys) -> EchelonBasis:
    """Tracking echelon basis of f(k), tagged by k."""
    basis = EchelonBasis(f.field, track=True)
    for k in keys:
        basis.add(f.apply_basis(k), tag=k)
    return basis


def _hopf_map_check(name: str, f: LinearMap) -> CheckResult:
    if isinstance(f, GeneratorMap):
        ok, witness = is_hopf_map(f)
    else:
        ok, witness = is_algebra_map(f, exhaustive=True)
        if ok:
            ok, witness = is_coalgebra_map(f)
    return CheckResult.of(name, ok, witness=f"{f.name or name}: {witness}")


def saturate_ideal(h: HopfAlgebra, seeds: list[dict], side: str = "left") -> EchelonBasis:
    """Span of h·seeds (side="left") or seeds·h (side="right"), closed under generators."""
    field = h.field
    gens = generator_vectors(h)
    basis = EchelonBasis(field)
    queue = list(seeds)
    while queue:
        v = queue.pop()
        if not basis.add(v):
            continue
        for g in gens:
            queue.append(h.multiply(g, v) if side == "left" else h.multiply(v, g))
    return basis


def augmentation_image(e: ExtensionCandidate) -> list[dict]:
    """iota(K+) spanned by iota(k - eps(k) 1) over the basis of K."""
    field = e.field
    out = []
    for k in e.K.basis:
        v = axpy(field, {k: 1}, field.neg(e.K.counit_basis(k)), e.K.unit())
        if v:
            out.append(e.iota.apply(v))
    return out


def ad_left(h: HopfAlgebra, a: dict, x: dict) -> dict:
    """a_(1) x S(a_(2))."""
    field = h.field
    out: dict = {}
    for (u, v), c in h.coproduct(a).items():
        axpy(field, out, c, h.multiply(h.multiply({u: 1}, x), h.antipode_basis(v)))
    return out


# ── exactness ──

def is_normal_subalgebra(e: ExtensionCandidate, mode: CheckMode | None = None) -> tuple[bool, str | None]:
    """H iota(K+) = iota(K+) H.

    Exhaustively the two one-sided ideals are saturated and compared. On generators,
    iota(K) is checked to be stable under the left adjoint action of the generators of H
    (enough when every tensor factor of Δ(generator) is a generator or 1), which gives
    H K+ ⊂ K+ H, and the two sides have equal dimension.
    """
    mode = resolve_mode(e, mode)
    h = e.H
    if mode == CheckMode.EXHAUSTIVE:
        seeds = augmentation_image(e)
        left = saturate_ideal(h, seeds, "left")
        right = saturate_ideal(h, seeds, "right")
        for row in right.basis():
            if not left.contains(row):
                return False, f"{h.algebra.format(row)} lies in K+H but not in HK+"
        if left.rank != right.rank:
            return False, f"dim HK+ = {left.rank} but dim K+H = {right.rank}"
        return True, None

    letters = set(h.generators()) | {()}
    for w in h.generators():
        if not all(u in letters and v in letters for u, v in h.coproduct_basis(w)):
            return is_normal_subalgebra(e, CheckMode.EXHAUSTIVE)
    k_image = _image_basis(e.iota, e.K.basis)
    for a in generator_vectors(h):
        for k in generator_keys(e.K):
            moved = ad_left(h, a, e.iota.apply_basis(k))
            if not k_image.contains(moved):
                return False, f"ad({h.algebra.format(a)})({_fmt(e.K, k)}) leaves K"
    return True, None


def _cocommutative(h: HopfAlgebra) -> bool:
    return all(flip(h.coproduct_basis(k)) == h.coproduct_basis(k) for k in generator_keys(h))


def _commutative(h: HopfAlgebra) -> bool:
    gens = generator_vectors(h)
    return all(h.multiply(a, b) == h.multiply(b, a) for a, b in itertools.combinations(gens, 2))


def abelian_flags(e: ExtensionCandidate) -> tuple[bool, bool]:
    """(K commutative, L cocommutative); both together make the extension abelian."""
    return _commutative(e.K), _cocommutative(e.L)


def _surjective(e: ExtensionCandidate, mode: CheckMode) -> CheckResult:
    if mode == CheckMode.EXHAUSTIVE:
        rank = e.pi.rank()
        return CheckResult.of("surjective", rank == e.L.dim, witness=f"rank pi = {rank} < dim L = {e.L.dim}", rank=rank)
    images = {}
    for w in e.H.generators():
        images[w] = e.pi.apply_basis(w)
    for w in e.L.generators():
        target = e.L.algebra.normal_form({w: 1})
        pre = e.preimages.get(w)
        hit = any(v == target for v in images.values()) or (pre is not None and e.pi.apply(pre) == target)
        if not hit:
            return CheckResult.of("surjective", False, witness=f"no preimage found for {_fmt(e.L, w)}")
    return CheckResult.of("surjective", True, method="generators")


def _kernel(e: ExtensionCandidate, mode: CheckMode, pi_rank: int | None) -> CheckResult:
    field = e.field
    if mode == CheckMode.EXHAUSTIVE:
        left = saturate_ideal(e.H, augmentation_image(e), "left")
        for row in left.basis():
            if e.pi.apply(row):
                return CheckResult.of("kernel", False, witness=f"pi({e.H.algebra.format(row)}) ≠ 0")
        kernel_dim = e.H.dim - (pi_rank if pi_rank is not None else e.pi.rank())
        return CheckResult.of(
            "kernel", left.rank == kernel_dim,
            witness=f"dim HK+ = {left.rank} but dim ker pi = {kernel_dim}", dim=left.rank,
        )
    for k in generator_keys(e.K):
        value = e.pi.apply(e.iota.apply_basis(k))
        if value != _scalar_unit(e.L, e.K.counit_basis(k)):
            return CheckResult.of("kernel", False, witness=f"pi(iota({_fmt(e.K, k)})) ≠ eps 1")
    return CheckResult.of("kernel", e.K.dim * e.L.dim == e.H.dim, witness="dimensions do not multiply",
                          method="generators + dimension count")


def _coinvariant_defect(e: ExtensionCandidate, vec: dict) -> dict:
    """(id⊗pi)Δ(c) - c⊗1."""
    field = e.field
    lhs = tensor_apply(field, e.H.coproduct(vec), None, e.pi.apply_basis)
    return axpy(field, lhs, field.neg(1), pure(field, vec, e.L.unit()))


def _coinvariants(e: ExtensionCandidate, mode: CheckMode) -> CheckResult:
    keys = e.K.basis if mode == CheckMode.EXHAUSTIVE else generator_keys(e.K)
    for k in keys:
        if _coinvariant_defect(e, e.iota.apply_basis(k)):
            return CheckResult.of("coinvariants", False, witness=f"iota({_fmt(e.K, k)}) is not pi-coinvariant")
    if mode == CheckMode.GENERATORS:
        return CheckResult.of("coinvariants", e.K.dim * e.L.dim == e.H.dim, witness="dimensions do not multiply",
                              method="generators + dimension count")
    basis = EchelonBasis(e.field, track=True)
    for w in e.H.basis:
        basis.add(_coinvariant_defect(e, {w: 1}), tag=w)
    dim = len(basis.relations)
    return CheckResult.of("coinvariants", dim == e.K.dim,
                          witness=f"dim H^co pi = {dim} but dim K = {e.K.dim}", dim=dim)


def check_exact(e: ExtensionCandidate, mode: CheckMode | None = None) -> ExtensionReport:
    """(i) iota injective, (ii) pi surjective, (iii) ker pi = H iota(K+), (iv) H^co pi = iota(K)."""
    mode = resolve_mode(e, mode)
    checks = [_hopf_map_check("iota_hopf", e.iota), _hopf_map_check("pi_hopf", e.pi)]
    rank = e.iota.rank()
    checks.append(CheckResult.of("injective", rank == e.K.dim, witness=f"rank iota = {rank} < dim K = {e.K.dim}"))
    surjective = _surjective(e, mode)
    checks.append(surjective)
    checks.append(_kernel(e, mode, surjective.detail.get("rank")))
    checks.append(_coinvariants(e, mode))
    checks.append(CheckResult.of("dimensions", e.K.dim * e.L.dim == e.H.dim,
                                 witness=f"{e.K.dim} * {e.L.dim} ≠ {e.H.dim}"))
    normal, witness = is_normal_subalgebra(e, mode)
    checks.append(CheckResult.of("normal", normal, witness=witness))
    commutative, cocommutative = abelian_flags(e)
    report = ExtensionReport(
        subject=e.name or "extension", level=ExtensionLevel.EXACT, mode=mode, checks=checks,
        dimensions=e.dimensions, abelian=commutative and cocommutative,
    )
    log_verdict("exact", report.verdict.value, extension=report.subject, mode=mode.value, **e.dimensions)
    return report


# ── cleaving ──

def _pullback(e: ExtensionCandidate, k_image: EchelonBasis, vec: dict, what: str) -> dict:
    combo = k_image.express(vec)
    if combo is None:
        raise VerificationError(f"{what} does not lie in iota(K)", witness=e.H.algebra.format(vec))
    return combo


def section_inverse(e: ExtensionCandidate, s: LinearMap) -> LinearMap:
    return convolution_inverse(s, e.L, candidate=antipode_candidate(s, e.L))


def retraction_from_section(e: ExtensionCandidate, s: LinearMap, s_inv: LinearMap | None = None) -> LinearMap:
    """r(c) = c_(1) s^{-1}(pi(c_(2))), pulled back along iota.

    For a section s colinear over L this is the unique K-linear retraction with
    r s = eps 1; on a PBW basis of the form (K-monomial)(L-monomial) it kills every
    monomial with a nontrivial L-part.
    """
    s_inv = s_inv or section_inverse(e, s)
    k_image = _image_basis(e.iota, e.K.basis)
    h = e.H

    def rule(c):
        out: dict = {}
        for (c1, c2), coef in h.coproduct_basis(c).items():
            axpy(e.field, out, coef, h.multiply({c1: 1}, s_inv.apply(e.pi.apply_basis(c2))))
        return _pullback(e, k_image, out, f"r({_fmt(h, c)})")

    return LinearMap(h, e.K, rule=rule, name="r")


def _retraction_inverse_candidate(e: ExtensionCandidate, s: LinearMap) -> LinearMap:
    """r^{-1}(c) = s(pi(c_(1))) S(c_(2)), pulled back along iota."""
    k_image = _image_basis(e.iota, e.K.basis)
    h = e.H

    def rule(c):
        out: dict = {}
        for (c1, c2), coef in h.coproduct_basis(c).items():
            axpy(e.field, out, coef, h.multiply(s.apply(e.pi.apply_basis(c1)), h.antipode_basis(c2)))
        return _pullback(e, k_image, out, f"r^-1({_fmt(h, c)})")

    return LinearMap(h, e.K, rule=rule, name="r^-1")


def _first(keys, test, fmt) -> str | None:
    for k in keys:
        if not test(k):
            return fmt(k)
    return None


def check_cleaving(e: ExtensionCandidate, c: CleavingPair, mode: CheckMode | None = None,
                   seed: int | None = None) -> ExtensionReport:
    """Conditions (a)-(e) linking s, r and their convolution inverses, plus the section properties."""
    mode = resolve_mode(e, mode)
    field = e.field
    h, k_alg, l_alg = e.H, e.K, e.L
    neg = field.neg(1)
    checks: list[CheckResult] = []
    try:
        c.s_inv = c.s_inv or section_inverse(e, c.s)
        c.r_inv = c.r_inv or convolution_inverse(c.r, h, candidate=_retraction_inverse_candidate(e, c.s))
    except (NotInvertibleError, VerificationError) as err:
        checks.append(CheckResult.of("invertible", False, witness=str(err)))
        return _cleft_report(e, mode, checks)
    checks.append(CheckResult.of("invertible", True))

    keys = sample_keys(h, mode, seed)
    fmt_h = lambda w: _fmt(h, w)
    iota = e.iota

    def cond_a(w):
        lhs = c.s_inv.apply(e.pi.apply_basis(w))
        rhs: dict = {}
        for (u, v), coef in h.coproduct_basis(w).items():
            axpy(field, rhs, coef, h.multiply(h.antipode_basis(u), iota.apply(c.r.apply_basis(v))))
        return not sub(field, lhs, rhs)

    def cond_b(w):
        lhs = c.s.apply(e.pi.apply_basis(w))
        rhs: dict = {}
        for (u, v), coef in h.coproduct_basis(w).items():
            axpy(field, rhs, coef, h.multiply(iota.apply(c.r_inv.apply_basis(u)), {v: 1}))
        return not sub(field, lhs, rhs)

    def cond_c(w):
        lhs = iota.apply(c.r_inv.apply_basis(w))
        rhs: dict = {}
        for (u, v), coef in h.coproduct_basis(w).items():
            axpy(field, rhs, coef, h.multiply(c.s.apply(e.pi.apply_basis(u)), h.antipode_basis(v)))
        return not sub(field, lhs, rhs)

    def cond_d(w):
        lhs = iota.apply(c.r.apply_basis(w))
        rhs: dict = {}
        for (u, v), coef in h.coproduct_basis(w).items():
            axpy(field, rhs, coef, h.multiply({u: 1}, c.s_inv.apply(e.pi.apply_basis(v))))
        return not sub(field, lhs, rhs)

    try:
        for name, test in (("a", cond_a), ("b", cond_b), ("c", cond_c), ("d", cond_d)):
            witness = _first(keys, test, fmt_h)
            checks.append(CheckResult.of(f"condition_{name}", witness is None, witness=witness, checked=len(keys)))
    except VerificationError as err:
        checks.append(CheckResult.of("retraction_values", False, witness=str(err)))
        return _cleft_report(e, mode, checks)

    l_keys = list(l_alg.basis)
    witness = _first(l_keys, lambda b: c.r.apply(c.s.apply_basis(b)) == _scalar_unit(k_alg, l_alg.counit_basis(b)),
                     lambda b: _fmt(l_alg, b))
    checks.append(CheckResult.of("condition_e", witness is None, witness=witness))

    witness = _first(l_keys, lambda b: e.pi.apply(c.s.apply_basis(b)) == l_alg.algebra.normal_form({b: 1}),
                     lambda b: f"pi s({_fmt(l_alg, b)})")
    checks.append(CheckResult.of("section", witness is None, witness=witness))

    witness = _first(k_alg.basis, lambda k: c.r.apply(iota.apply_basis(k)) == {k: 1}, lambda k: f"r iota({_fmt(k_alg, k)})")
    checks.append(CheckResult.of("retraction", witness is None, witness=witness))

    checks.append(CheckResult.of("unit", c.s.apply(l_alg.unit()) == h.unit(), witness="s(1) ≠ 1"))
    witness = _first(keys, lambda w: k_alg.counit(c.r.apply_basis(w)) == h.counit_basis(w), fmt_h)
    checks.append(CheckResult.of("counit", witness is None, witness=witness))

    colinear_keys = generator_keys(l_alg) if isinstance(c.s, GeneratorMap) else l_keys

    def colinear(b):
        lhs = tensor_apply(field, l_alg.coproduct_basis(b), c.s.apply_basis, None)
        rhs = tensor_apply(field, h.coproduct(c.s.apply_basis(b)), None, e.pi.apply_basis)
        return not axpy(field, lhs, neg, rhs)

    witness = _first(colinear_keys, colinear, lambda b: f"(s⊗id)Δ({_fmt(l_alg, b)})")
    checks.append(CheckResult.of("colinear", witness is None, witness=witness))

    def k_linear(pair):
        k, w = pair
        lhs = c.r.apply(h.multiply(iota.apply_basis(k), {w: 1}))
        rhs = k_alg.multiply({k: 1}, c.r.apply_basis(w))
        return lhs == rhs

    pairs = list(itertools.product(generator_keys(k_alg), keys))
    witness = _first(pairs, k_linear, lambda kw: f"r({_fmt(k_alg, kw[0])}·{fmt_h(kw[1])})")
    checks.append(CheckResult.of("k_linear", witness is None, witness=witness))
    return _cleft_report(e, mode, checks)


def _cleft_report(e: ExtensionCandidate, mode: CheckMode, checks: list[CheckResult]) -> ExtensionReport:
    report = ExtensionReport(subject=e.name or "extension", level=ExtensionLevel.CLEFT, mode=mode,
                             checks=checks, dimensions=e.dimensions)
    log_verdict("cleft", report.verdict.value, extension=report.subject, mode=mode.value)
    return report


def check_split(e: ExtensionCandidate, c: CleavingPair, mode: CheckMode | None = None,
                seed: int | None = None) -> ExtensionReport:
    """s an algebra map and r a coalgebra map."""
    mode = resolve_mode(e, mode)
    ok, witness = is_algebra_map(c.s, exhaustive=not isinstance(c.s, GeneratorMap))
    checks = [CheckResult.of("s_algebra_map", ok, witness=witness)]
    try:
        ok, witness = is_coalgebra_map(c.r, keys=sample_keys(e.H, mode, seed))
    except HopfextError as err:
        ok, witness = False, str(err)
    checks.append(CheckResult.of("r_coalgebra_map", ok, witness=witness))
    report = ExtensionReport(subject=e.name or "extension", level=ExtensionLevel.SPLIT, mode=mode,
                             checks=checks, dimensions=e.dimensions)
    log_verdict("split", report.verdict.value, extension=report.subject, mode=mode.value)
    return report


def verify_extension(e: ExtensionCandidate, c: CleavingPair | None, level: ExtensionLevel = ExtensionLevel.SPLIT,
                     mode: CheckMode | None = None, seed: int | None = None) -> list[ExtensionReport]:
    """exact -> cleft -> split, stopping at ``level`` or at the first failing stage."""
    reports = [check_exact(e, mode)]
    if level == ExtensionLevel.EXACT or not reports[-1].passed or c is None:
        return reports
    reports.append(check_cleaving(e, c, mode, seed))
    if level == ExtensionLevel.CLEFT or not reports[-1].passed:
        return reports
    reports.append(check_split(e, c, mode, seed))
    return reports
