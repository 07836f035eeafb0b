"""Bicrossed product data (weak action, weak coaction, cocycle, dual cocycle) and K # L."""
from __future__ import annotations

from dataclasses import dataclass

from hopfext.api.schemas import CheckResult, DatumReport, VerificationReport
from hopfext.core.errors import VerificationError
from hopfext.core.linalg import axpy, scale
from hopfext.core.logger import log, log_verdict
from hopfext.services.algebra.table import TableAlgebra
from hopfext.services.extensions.sequence import (
    CleavingPair, ExtensionCandidate, _image_basis, _pullback, _retraction_inverse_candidate, section_inverse,
)
from hopfext.services.hopf.axioms import check_hopf
from hopfext.services.hopf.convolution import convolution_inverse
from hopfext.services.hopf.maps import LinearMap, is_algebra_map, is_coalgebra_map
from hopfext.services.hopf.structure import HopfAlgebra, TableHopf
from hopfext.services.hopf.tensor import coassoc_left, pure, tensor_multiply


@dataclass
class BicrossedDatum:
    """All four maps on basis keys.

    ``action[(b, a)]`` = b ⇀ a in K, ``coaction[b]`` = rho(b) in L⊗K,
    ``sigma[(b, b')]`` in K and ``tau[b]`` in K⊗K.
    """
    K: HopfAlgebra
    L: HopfAlgebra
    action: dict
    coaction: dict
    sigma: dict
    tau: dict

    def act(self, b: dict, a: dict) -> dict:
        field = self.K.field
        out: dict = {}
        for u, cu in b.items():
            for v, cv in a.items():
                axpy(field, out, field.mul(cu, cv), self.action[(u, v)])
        return out


def _delta2(h: HopfAlgebra, key) -> dict:
    """(Δ⊗id)Δ on a basis key, over triples."""
    return coassoc_left(h.field, h.coproduct_basis(key), h.coproduct_basis)


def trivial_datum(K: HopfAlgebra, L: HopfAlgebra) -> BicrossedDatum:
    """Trivial action and coaction, sigma = eps⊗eps 1, tau = eps 1⊗1: the datum of K ⊗ L."""
    field = K.field
    one = K.unit()
    action, coaction, sigma, tau = {}, {}, {}, {}
    for b in L.basis:
        eb = L.counit_basis(b)
        coaction[b] = pure(field, {b: 1}, one)
        tau[b] = scale(field, pure(field, one, one), eb)
        for a in K.basis:
            action[(b, a)] = scale(field, {a: 1}, eb)
        for b2 in L.basis:
            sigma[(b, b2)] = scale(field, one, field.mul(eb, L.counit_basis(b2)))
    return BicrossedDatum(K, L, action, coaction, sigma, tau)


def extract_datum(e: ExtensionCandidate, c: CleavingPair, split: bool = False) -> tuple[BicrossedDatum, DatumReport]:
    """Datum of a cleft extension; the preimage of b under pi is taken to be s(b).

        b ⇀ a = s(b_1) a s^{-1}(b_2)
        sigma(b, b') = s(b_1) s(b'_1) s^{-1}(b_2 b'_2)
        rho(pi(c)) = pi(c_2) ⊗ r^{-1}(c_1) r(c_3)
        tau(pi(c)) = Δ(r^{-1}(c_1)) (r(c_2) ⊗ r(c_3))
    """
    field = e.field
    H, K, L = e.H, e.K, e.L
    s_inv = c.s_inv or section_inverse(e, c.s)
    r_inv = c.r_inv or convolution_inverse(c.r, H, candidate=_retraction_inverse_candidate(e, c.s))
    c.s_inv, c.r_inv = s_inv, r_inv
    k_image = _image_basis(e.iota, K.basis)

    action, sigma, coaction, tau = {}, {}, {}, {}
    for b in L.basis:
        delta_b = L.coproduct_basis(b)
        for a in K.basis:
            out: dict = {}
            ia = e.iota.apply_basis(a)
            for (b1, b2), coef in delta_b.items():
                axpy(field, out, coef, H.multiply(H.multiply(c.s.apply_basis(b1), ia), s_inv.apply_basis(b2)))
            action[(b, a)] = _pullback(e, k_image, out, "b ⇀ a")
        for b_ in L.basis:
            out = {}
            for (b1, b2), coef in delta_b.items():
                for (d1, d2), coef2 in L.coproduct_basis(b_).items():
                    left = H.multiply(c.s.apply_basis(b1), c.s.apply_basis(d1))
                    axpy(field, out, field.mul(coef, coef2), H.multiply(left, s_inv.apply(L.multiply({b2: 1}, {d2: 1}))))
            sigma[(b, b_)] = _pullback(e, k_image, out, "sigma(b, b')")

        rho: dict = {}
        t: dict = {}
        for (c1, c2, c3), coef in coassoc_left(field, H.coproduct(c.s.apply_basis(b)), H.coproduct_basis).items():
            ri = r_inv.apply_basis(c1)
            r3 = c.r.apply_basis(c3)
            axpy(field, rho, coef, pure(field, e.pi.apply_basis(c2), K.multiply(ri, r3)))
            right = pure(field, c.r.apply_basis(c2), r3)
            axpy(field, t, coef, tensor_multiply(field, K.algebra, K.algebra, K.coproduct(ri), right))
        coaction[b] = rho
        tau[b] = t

    datum = BicrossedDatum(K, L, action, coaction, sigma, tau)
    report = datum_report(datum, expect_bismash=split, subject=e.name or "extension")
    return datum, report


def datum_report(datum: BicrossedDatum, expect_bismash: bool = False, subject: str = "datum") -> DatumReport:
    triv = trivial_datum(datum.K, datum.L)
    flags = {
        "sigma_trivial": datum.sigma == triv.sigma,
        "tau_trivial": datum.tau == triv.tau,
        "action_trivial": datum.action == triv.action,
        "coaction_trivial": datum.coaction == triv.coaction,
    }
    checks = []
    if expect_bismash:
        checks = [
            CheckResult.of("sigma_trivial", flags["sigma_trivial"], witness="split extension with nontrivial cocycle"),
            CheckResult.of("tau_trivial", flags["tau_trivial"], witness="split extension with nontrivial dual cocycle"),
        ]
    report = DatumReport(subject=subject, checks=checks, **flags)
    log_verdict("split", report.verdict.value, datum=subject, **flags)
    return report


def bicrossed_product(datum: BicrossedDatum, name: str = "", verify: bool = True) -> tuple[TableHopf, ExtensionCandidate, CleavingPair]:
    """K # L on K ⊗ L with the canonical iota, pi, s, r.

        (k # h)(t # g) = k (h_1 ⇀ t) sigma(h_2, g_1) # h_3 g_2
        Δ(k # h) = k_1 tau^1(h_1) # rho(h_2)_i ⊗ k_2 tau^2(h_1) rho(h_2)^i # h_3
        S(a # b) = (S(rho(b)_i,2) ⇀ S(rho(b)^i) # S(rho(b)_i,1)) (S(a) # 1)
    """
    K, L = datum.K, datum.L
    field = K.field
    kb, lb = list(K.basis), list(L.basis)
    n_l = len(lb)
    index = {(a, b): i * n_l + j for i, a in enumerate(kb) for j, b in enumerate(lb)}
    labels = [f"{K.algebra.format_word(a)}#{L.algebra.format_word(b)}" for a in kb for b in lb]

    def outer(kvec: dict, lvec: dict) -> dict:
        return {index[a, b]: c for (a, b), c in pure(field, kvec, lvec).items()}

    delta2 = {b: _delta2(L, b) for b in lb}
    table: dict = {}
    for (k, h), i in index.items():
        for (t, g), j in index.items():
            out: dict = {}
            for (h1, h2, h3), c1 in delta2[h].items():
                left = K.multiply({k: 1}, datum.action[(h1, t)])
                if not left:
                    continue
                for (g1, g2), c2 in L.coproduct_basis(g).items():
                    kpart = K.multiply(left, datum.sigma[(h2, g1)])
                    if kpart:
                        axpy(field, out, field.mul(c1, c2), outer(kpart, L.multiply({h3: 1}, {g2: 1})))
            if out:
                table[(i, j)] = out

    delta: dict = {}
    for (k, h), i in index.items():
        out: dict = {}
        for (k1, k2), c1 in K.coproduct_basis(k).items():
            for (h1, h2, h3), c2 in delta2[h].items():
                for (t1, t2), c3 in datum.tau[h1].items():
                    for (li, ki), c4 in datum.coaction[h2].items():
                        coef = field.mul(field.mul(c1, c2), field.mul(c3, c4))
                        left = outer(K.multiply({k1: 1}, {t1: 1}), {li: 1})
                        right = outer(K.multiply(K.multiply({k2: 1}, {t2: 1}), {ki: 1}), {h3: 1})
                        axpy(field, out, coef, pure(field, left, right))
        delta[i] = out

    counit = [field.mul(K.counit_basis(k), L.counit_basis(h)) for (k, h) in index]
    algebra = TableAlgebra(field, labels, table, outer(K.unit(), L.unit()), name=name or f"{K.name}#{L.name}")

    antipode: dict = {}
    for (a, b), i in index.items():
        first: dict = {}
        for (li, ki), coef in datum.coaction[b].items():
            s_k = K.antipode_basis(ki)
            for (l1, l2), coef2 in L.coproduct_basis(li).items():
                acted = datum.act(L.antipode_basis(l2), s_k)
                axpy(field, first, field.mul(coef, coef2), outer(acted, L.antipode_basis(l1)))
        antipode[i] = algebra.multiply(first, outer(K.antipode_basis(a), L.unit()))

    product = TableHopf(algebra, delta, counit, antipode)
    if verify:
        report = check_hopf(product)
        if not report.passed:
            raise VerificationError("bicrossed datum rejected", witness=report.failures()[0].witness)
    log("TASK", op="bicrossed_product", algebra=algebra.name, dim=product.dim)

    iota = LinearMap(K, product, rule=lambda a: outer({a: 1}, L.unit()), name="iota")
    pi = LinearMap(product, L, rule=lambda i: scale(field, {lb[i % n_l]: 1}, K.counit_basis(kb[i // n_l])), name="pi")
    s = LinearMap(L, product, rule=lambda b: outer(K.unit(), {b: 1}), name="s")
    r = LinearMap(product, K, rule=lambda i: scale(field, {kb[i // n_l]: 1}, L.counit_basis(lb[i % n_l])), name="r")
    ext = ExtensionCandidate(K, product, L, iota, pi, name=algebra.name)
    return product, ext, CleavingPair(s, r)


def compare_factorization(e: ExtensionCandidate, c: CleavingPair, product: TableHopf) -> VerificationReport:
    """a # b -> iota(a) s(b) must be a bijective algebra and coalgebra map K # L -> H."""
    kb, lb = list(e.K.basis), list(e.L.basis)
    n_l = len(lb)
    H = e.H
    phi = LinearMap(
        product, H,
        rule=lambda i: H.multiply(e.iota.apply_basis(kb[i // n_l]), c.s.apply_basis(lb[i % n_l])),
        name="phi",
    )
    rank = phi.rank()
    checks = [CheckResult.of("bijective", rank == H.dim == product.dim, witness=f"rank {rank}, dims {product.dim}/{H.dim}")]
    ok, witness = is_algebra_map(phi, exhaustive=True)
    checks.append(CheckResult.of("algebra_map", ok, witness=witness))
    ok, witness = is_coalgebra_map(phi)
    checks.append(CheckResult.of("coalgebra_map", ok, witness=witness))
    report = VerificationReport(subject=f"{product.name} ≅ {H.name}", checks=checks)
    log_verdict("split", report.verdict.value, compare=report.subject)
    return report
