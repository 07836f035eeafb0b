"""The split abelian extension k -> K -> B(V(1, a)) # kΓ -> u(l) -> k."""
from __future__ import annotations

from hopfext.core.errors import PreconditionError
from hopfext.core.linalg import scale
from hopfext.core.logger import log
from hopfext.services.extensions.sequence import CleavingPair, ExtensionCandidate, retraction_from_section
from hopfext.services.hopf.maps import GeneratorMap
from hopfext.services.hopf.structure import HopfStructure, sub_hopf
from hopfext.services.lie.ghost import GhostLie, build_l_from_data, small_enveloping
from hopfext.services.nichols.bosonization import bosonize
from hopfext.services.nichols.braided import realize
from hopfext.services.nichols.data import BraidingData
from hopfext.services.nichols.presentation import generator_index, nichols_presentation, sch_polynomial


def split_extension(d: BraidingData, f: int | None = None, degree_bound: int | None = None,
                    ) -> tuple[ExtensionCandidate, CleavingPair]:
    """K = k<x_1..x_t, g_1..g_theta> ⊂ H and pi: H -> u(l) with

        pi(g_i) = 1,  pi(x_j) = 0,  pi(y_j) = E_j,  pi(x_h) = v_h,

    section s(E_j) = -S(y_j), s(v_h) = -S(x_h), and the retraction r built from s.
    """
    if not d.is_trivial_q():
        raise PreconditionError("the split extension needs q = 1; twist first")
    r = realize(d, f)
    H = bosonize(nichols_presentation(d), r, degree_bound)
    lie = build_l_from_data(d)
    L = small_enveloping(lie)
    xs, ys = generator_index(d)
    n = len(xs) + len(ys)
    gens = list(range(n, n + d.theta))

    K = sub_hopf(H, [xs[j] for j in d.blocks] + gens, expected_dimension=d.p ** d.t * r.f ** d.theta, name="K")
    iota = GeneratorMap(K, H, {i: {(g,): 1} for i, g in enumerate([xs[j] for j in d.blocks] + gens)}, name="iota")
    pi = GeneratorMap(H, L, _pi_images(d, xs, ys, gens), name="pi")
    s = GeneratorMap(L, H, _section_images(d, H, xs, ys), name="s")
    ext = ExtensionCandidate(K, H, L, iota, pi, name=f"{H.name}->u(l)")
    retraction = retraction_from_section(ext, s)
    log("TASK", op="split_extension", K=K.dim, H=H.dim, L=L.dim)
    return ext, CleavingPair(s, retraction)


def _pi_images(d: BraidingData, xs: dict, ys: dict, gens: list[int]) -> dict:
    t = d.t
    images = {g: {(): 1} for g in gens}
    for j in d.blocks:
        images[xs[j]] = {}
        images[ys[j]] = {(j,): 1}
    for k, h in enumerate(d.points):
        images[xs[h]] = {(t + k,): 1}
    return images


def _section_images(d: BraidingData, H: HopfStructure, xs: dict, ys: dict) -> dict:
    """Generator k of the small presentation of u(l) goes to -S(y_j) or -S(x_h)."""
    field = H.field
    neg = field.neg(1)
    images = {}
    for j in d.blocks:
        images[j] = scale(field, H.antipode_basis((ys[j],)), neg)
    for k, h in enumerate(d.points):
        images[d.t + k] = scale(field, H.antipode_basis((xs[h],)), neg)
    return images


def sch_images(ext: ExtensionCandidate, d: BraidingData, lie: GhostLie) -> list[tuple[str, bool]]:
    """pi(sch_{h,n}) = v_{h,n} for every point h and n in its box."""
    H, L = ext.H, ext.L
    out = []
    for h, m in lie.module.vectors():
        image = ext.pi.apply(H.algebra.normal_form(sch_polynomial(d, h, m).terms))
        expected = L.algebra.normal_form(lie.v_polynomial(h, m).terms)
        out.append((lie.names[lie.v(h, m)], image == expected))
    return out
