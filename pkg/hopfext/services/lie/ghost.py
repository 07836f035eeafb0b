"""The restricted Lie algebra l = V(G) ⋊ n attached to a ghost matrix."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from hopfext.core.errors import PreconditionError
from hopfext.core.field import FieldSpec
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.polynomial import NcPolynomial, commutator
from hopfext.services.algebra.presentation import Presentation, make_presentation
from hopfext.services.hopf.structure import HopfStructure
from hopfext.services.lie.matched import MatchedPairRL
from hopfext.services.lie.restricted import RestrictedLie
from hopfext.services.nichols.data import BraidingData, ahz_lattice


@dataclass(frozen=True)
class GhostModuleData:
    """Bases v_{h,m} (m in A_h) of the simple modules V(G_h), and E_j v_{h,m} = v_{h,m+e_j}."""
    t: int
    points: tuple[int, ...]
    ghost: tuple[tuple[int, ...], ...]

    def lattice(self, h: int) -> list[tuple[int, ...]]:
        return ahz_lattice(self.ghost[self.points.index(h)])

    def vectors(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(h, m) for h in self.points for m in self.lattice(h)]

    def raise_index(self, h: int, m: tuple[int, ...], j: int) -> tuple[int, ...] | None:
        """m + e_j, or None past the box."""
        row = self.ghost[self.points.index(h)]
        if m[j] >= row[j]:
            return None
        return m[:j] + (m[j] + 1,) + m[j + 1:]


def e_name(t: int, j: int) -> str:
    return "E" if t == 1 else f"E{j + 1}"


def v_name(h: int, m: tuple[int, ...]) -> str:
    return f"v{h + 1}_" + "_".join(str(k) for k in m)


class GhostLie(RestrictedLie):
    """l = V(G) ⋊ n with basis E_1..E_t, then v_{h,m}; p-operation 0 on the basis."""

    def __init__(self, field: FieldSpec, module: GhostModuleData):
        self.module = module
        t = module.t
        self.e_index = {j: j for j in range(t)}
        self.v_index = {hm: t + k for k, hm in enumerate(module.vectors())}
        names = [e_name(t, j) for j in range(t)] + [v_name(h, m) for h, m in module.vectors()]
        table = {}
        for j in range(t):
            for (h, m), idx in self.v_index.items():
                up = module.raise_index(h, m, j)
                if up is not None:
                    table[(j, idx)] = {self.v_index[(h, up)]: 1}
        bracket = RestrictedLie.from_table(field, names, table).bracket_table
        super().__init__(field, names, bracket, name="l")

    def e(self, j: int) -> int:
        return self.e_index[j]

    def v(self, h: int, m) -> int:
        return self.v_index[(h, tuple(m))]

    def v_polynomial(self, h: int, m) -> NcPolynomial:
        """v_{h,m} as an iterated commutator in the letters E_1..E_t, v_h of the small presentation."""
        t = self.module.t
        es = [NcPolynomial.letter(self.field, j) for j in range(t)]
        out = NcPolynomial.letter(self.field, t + self.module.points.index(h))
        for j in reversed(range(t)):
            for _ in range(m[j]):
                out = commutator(es[j], out)
        return out

    def presentation(self, degree_bound: int | None = None) -> Presentation:
        """u(l) on generators E_j, v_h = v_{h,0} with the relations

            E_j E_k = E_k E_j,  (ad E_j)^{1+G_hj}(v_h) = 0,  v_{h,m} v_{i,n} = v_{i,n} v_{h,m},
            E_j^p = 0,  v_{h,m}^p = 0,
        where v_{h,m} = (ad E_1)^{m_1} ... (ad E_t)^{m_t}(v_h).
        """
        module = self.module
        field = self.field
        p = field.p
        t = module.t
        names = [e_name(t, j) for j in range(t)] + [v_name(h, (0,) * t) for h in module.points]
        es = [NcPolynomial.letter(field, j) for j in range(t)]
        vm = self.v_polynomial

        rels = [commutator(es[j], es[k]) for j, k in itertools.combinations(range(t), 2)]
        for h in module.points:
            row = module.ghost[module.points.index(h)]
            for j in range(t):
                rels.append(vm(h, tuple(1 + row[j] if i == j else 0 for i in range(t))))
        vecs = [vm(h, m) for h, m in module.vectors()]
        rels += [commutator(a, b) for a, b in itertools.combinations(vecs, 2)]
        rels += [e ** p for e in es]
        rels += [v ** p for v in vecs]
        degree_sum = t + sum(1 + sum(m) for _, m in module.vectors())
        return make_presentation(
            field, names, rels,
            expected_dimension=p ** self.dim,
            degree_bound=degree_bound or (p - 1) * degree_sum + p + 2,
            name="u(l)-small",
        )


def build_l(field: FieldSpec, ghost, t: int | None = None, points=None) -> GhostLie:
    """l from a ghost matrix indexed [point][block]; points default to t..t+rows-1."""
    ghost = tuple(tuple(int(g) for g in row) for row in ghost)
    if t is None:
        t = len(ghost[0]) if ghost else 0
    if any(len(row) != t for row in ghost):
        raise PreconditionError(f"every ghost row needs {t} entries")
    if any(not 0 <= g <= field.p - 1 for row in ghost for g in row):
        raise PreconditionError(f"ghost entries must lie in 0..{field.p - 1}")
    points = tuple(points) if points is not None else tuple(range(t, t + len(ghost)))
    return GhostLie(field, GhostModuleData(t, points, ghost))


def build_l_from_data(d: BraidingData) -> GhostLie:
    return build_l(d.field, d.ghost, d.t, tuple(d.points))


def ghost_matched_pair(lie: GhostLie) -> MatchedPairRL:
    """(V(G), n) with ▷ the module action of n and ◁ = 0; its double crossproduct is l."""
    field = lie.field
    t = lie.module.t
    vectors = lie.module.vectors()
    g = RestrictedLie(field, [lie.names[t + k] for k in range(len(vectors))], {}, name="V(G)")
    n = RestrictedLie(field, [lie.names[j] for j in range(t)], {}, name="n")
    left = {}
    for j in range(t):
        for k in range(len(vectors)):
            image = lie.bracket_basis(j, t + k)
            if image:
                left[(j, k)] = {idx - t: c for idx, c in image.items()}
    return MatchedPairRL(g, n, left, {})


def iterated_ad(u: HopfStructure | FinBasisAlgebra, lie: GhostLie, h: int, m) -> dict:
    """(ad E_1)^{m_1} ... (ad E_t)^{m_t}(v_h) computed inside u(l)."""
    alg = u.algebra if isinstance(u, HopfStructure) else u
    t = lie.module.t
    out = alg.normal_form({(t + lie.module.points.index(h),): 1})
    neg = alg.field.neg(1)
    for j in reversed(range(t)):
        e = {(lie.e(j),): 1}
        for _ in range(m[j]):
            left = alg.multiply(e, out)
            right = alg.multiply(out, e)
            for w, c in right.items():
                left[w] = alg.field.add(left.get(w, 0), alg.field.mul(neg, c))
            out = {w: c for w, c in left.items() if c}
    return out


def small_enveloping(lie: GhostLie, degree_bound: int | None = None) -> HopfStructure:
    """u(l) on the generators E_j, v_h, all primitive."""
    pres = lie.presentation(degree_bound)
    alg = FinBasisAlgebra.build(pres)
    neg = lie.field.neg(1)
    gens = range(len(pres.generators))
    return HopfStructure(
        alg,
        {i: {((i,), ()): 1, ((), (i,)): 1} for i in gens},
        {i: 0 for i in gens},
        {i: {(i,): neg} for i in gens},
        grouplikes=set(),
    )
