"""Bosonization B(V) # kΓ for Γ = (Z/f)^theta."""
from __future__ import annotations

import itertools

from hopfext.core.errors import PreconditionError, VerificationError
from hopfext.core.linalg import EchelonBasis, axpy
from hopfext.core.logger import log
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.presentation import Presentation, make_presentation
from hopfext.services.algebra.words import ONE, Word
from hopfext.services.hopf.groups import group_generator_names, group_relations
from hopfext.services.hopf.structure import HopfStructure
from hopfext.services.nichols.braided import Realization, verify_realization
from hopfext.services.nichols.data import BraidingData
from hopfext.services.nichols.presentation import sch_polynomial


def _label_to_generator(pres: Presentation, r: Realization) -> list[int]:
    try:
        return [pres.index(label) for label in r.space.labels]
    except KeyError as e:
        raise PreconditionError(f"realization label {e} is not a generator of {pres.name}") from e


def bosonization_presentation(nichols: Presentation, r: Realization, degree_bound: int | None = None) -> Presentation:
    """Nichols relations, g_k^f = 1, commuting g's, and g_k v = (g_k . v) g_k."""
    field = nichols.field
    to_gen = _label_to_generator(nichols, r)
    n = len(nichols.generators)
    gnames = group_generator_names(r.rank)
    names = nichols.names + gnames

    rels = list(nichols.relations)
    rels += group_relations(field, (r.f,) * r.rank, offset=n)
    for k in range(r.rank):
        g = NcPolynomial.letter(field, n + k)
        for b, gen in enumerate(to_gen):
            image = NcPolynomial(field, {(to_gen[w],): c for w, c in r.actions[k][b].items()})
            rels.append(g * NcPolynomial.letter(field, gen) - image * g)

    if nichols.graded:
        degrees = [g.degree for g in nichols.generators] + [(0,) * len(nichols.generators[0].degree)] * r.rank
    else:
        degrees = None
    precedence = [nichols.generators[i].name for i in nichols.order.precedence] + gnames
    bound = degree_bound or ((nichols.degree_bound or 0) + r.rank * r.f + 2)
    expected = nichols.expected_dimension * r.f ** r.rank if nichols.expected_dimension else None
    return make_presentation(
        field, names, rels, degrees=degrees, precedence=precedence, grouplike=set(gnames),
        expected_dimension=expected, degree_bound=bound, name=f"{nichols.name}#k(Z/{r.f})^{r.rank}",
    )


def bosonize(nichols: FinBasisAlgebra | Presentation, r: Realization, degree_bound: int | None = None) -> HopfStructure:
    """Δ(v) = v⊗1 + g_deg(v)⊗v, Δ(g) = g⊗g, S(v) = -g^{-1} v, S(g) = g^{f-1}."""
    report = verify_realization(r)
    if not report.passed:
        raise VerificationError("realization failed verification", witness=report.failures()[0].witness)
    base = nichols.presentation if isinstance(nichols, FinBasisAlgebra) else nichols
    pres = bosonization_presentation(base, r, degree_bound)
    alg = FinBasisAlgebra.build(pres)
    field = pres.field
    n = len(base.generators)
    to_gen = _label_to_generator(base, r)

    delta, counit, antipode = {}, {}, {}
    for b, gen in enumerate(to_gen):
        g = n + r.degree(b)
        delta[gen] = {((gen,), ()): 1, ((g,), (gen,)): 1}
        counit[gen] = 0
        antipode[gen] = {(g,) * (r.f - 1) + (gen,): field.neg(1)}
    for k in range(r.rank):
        g = n + k
        delta[g] = {((g,), (g,)): 1}
        counit[g] = 1
        antipode[g] = {(g,) * (r.f - 1): 1}
    h = HopfStructure(alg, delta, counit, antipode)
    log("TASK", op="bosonize", algebra=pres.name, dim=alg.dim, expected=pres.expected_dimension)
    return h


def sch_coproduct_check(h: HopfStructure, d: BraidingData, point: int, n) -> tuple[bool, str | None]:
    """Δ(sch_{h,n}) - sch_{h,n}⊗1 lies in H ⊗ span{sch_{h,k} : k <= n}."""
    alg = h.algebra
    field = h.field
    sch = alg.normal_form(sch_polynomial(d, point, n).terms)
    rest = h.coproduct(sch)
    axpy(field, rest, field.neg(1), {(w, ()): c for w, c in sch.items()})

    span = EchelonBasis(field)
    for k in _below(tuple(n)):
        span.add(alg.normal_form(sch_polynomial(d, point, k).terms))

    by_left: dict = {}
    for (u, v), c in rest.items():
        by_left.setdefault(u, {})[v] = c
    for u, vec in sorted(by_left.items(), key=lambda kv: alg.presentation.order.key(kv[0])):
        if not span.contains(vec):
            return False, f"right factor of {alg.format_word(u)}⊗(...) leaves span{{sch_{point + 1},k}}: {alg.format(vec)}"
    return True, None


def _below(n: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [tuple(k) for k in itertools.product(*(range(v + 1) for v in n))]


def braided_coproduct(alg: FinBasisAlgebra, r: Realization, word: Word) -> dict[tuple[Word, Word], int]:
    """Δ_R(word) in R ⊗ R: letters are primitive and (a⊗b)(c⊗d) = a (deg b · c) ⊗ bd."""
    field = alg.field
    to_gen = _label_to_generator(alg.presentation, r)
    label = {gen: b for b, gen in enumerate(to_gen)}
    out: dict = {(ONE, ONE): 1}
    for x in word:
        nxt: dict = {}
        for (a, b), c in out.items():
            for w, cw in alg.mul_basis(b, (x,)).items():
                axpy(field, nxt, field.mul(c, cw), {(a, w): 1})
            exponents = [0] * r.rank
            for y in b:
                exponents[r.degree(label[y])] += 1
            moved = r.act_word([e % r.f for e in exponents], {label[x]: 1})
            for lb, cl in moved.items():
                for w, cw in alg.mul_basis(a, (to_gen[lb],)).items():
                    axpy(field, nxt, field.mul(c, field.mul(cl, cw)), {(w, b): 1})
        out = nxt
    return out
