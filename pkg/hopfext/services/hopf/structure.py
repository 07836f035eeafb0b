"""
Hopf structures over finite-dimensional algebras.

``HopfStructure`` stores Δ, ε, S on generators of a presented algebra and
extends them (Δ, ε multiplicatively, S anti-multiplicatively) with a memo per
word. ``TableHopf`` stores all four structure maps on an indexed basis; duals,
twists and bicrossed products come out in that form.
"""
from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

from hopfext.core.errors import ParseError, PreconditionError
from hopfext.core.linalg import axpy
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.presentation import make_presentation, presentation_from_dict
from hopfext.services.algebra.table import TableAlgebra
from hopfext.services.algebra.words import ONE, Word
from hopfext.services.hopf.tensor import Tensor, tensor_apply, tensor_multiply


class HopfAlgebra:
    """Shared interface: ``coproduct_basis``, ``counit_basis`` and ``antipode_basis`` per basis key."""

    algebra = None

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis(self) -> list:
        return self.algebra.basis

    @property
    def name(self) -> str:
        return self.algebra.name

    def multiply(self, a: dict, b: dict) -> dict:
        return self.algebra.multiply(a, b)

    def unit(self) -> dict:
        return self.algebra.unit()

    def coproduct_basis(self, key) -> Tensor:
        raise NotImplementedError

    def counit_basis(self, key) -> int:
        raise NotImplementedError

    def antipode_basis(self, key) -> dict:
        raise NotImplementedError

    def coproduct(self, vec: dict) -> Tensor:
        field = self.field
        out: Tensor = {}
        for k, c in vec.items():
            axpy(field, out, c, self.coproduct_basis(k))
        return out

    def counit(self, vec: dict) -> int:
        field = self.field
        total = 0
        for k, c in vec.items():
            total = field.add(total, field.mul(c, self.counit_basis(k)))
        return total

    def antipode(self, vec: dict) -> dict:
        field = self.field
        out: dict = {}
        for k, c in vec.items():
            axpy(field, out, c, self.antipode_basis(k))
        return out

    def is_cocommutative(self) -> bool:
        for k in self.basis:
            delta = self.coproduct_basis(k)
            if {(v, u): c for (u, v), c in delta.items()} != delta:
                return False
        return True

    def is_commutative(self) -> bool:
        alg = self.algebra
        basis = self.basis
        return all(
            alg.mul_basis(u, v) == alg.mul_basis(v, u)
            for i, u in enumerate(basis) for v in basis[i + 1:]
        )


class HopfStructure(HopfAlgebra):
    """Δ, ε, S given on the generators of a FinBasisAlgebra."""

    def __init__(
        self,
        algebra: FinBasisAlgebra,
        delta_gen: dict[int, Tensor],
        counit_gen: dict[int, int],
        antipode_gen: dict[int, dict],
        grouplikes: set[int] | None = None,
    ):
        self.algebra = algebra
        field = algebra.field
        self.delta_gen = {
            g: _normalize_tensor(algebra, t) for g, t in delta_gen.items()
        }
        self.counit_gen = {g: field.scalar(c) if field.m == 1 else c for g, c in counit_gen.items()}
        self.antipode_gen = {g: algebra.normal_form(s) for g, s in antipode_gen.items()}
        self.grouplikes = set(grouplikes if grouplikes is not None else
                              {g.index for g in algebra.presentation.generators if g.grouplike})
        missing = set(range(algebra.ngens)) - set(self.delta_gen)
        if missing:
            raise PreconditionError(f"no coproduct for generators {sorted(algebra.names[g] for g in missing)}")
        self._delta_cache: dict[Word, Tensor] = {ONE: {(ONE, ONE): 1}}
        self._antipode_cache: dict[Word, dict] = {ONE: {ONE: 1}}

    @property
    def presentation(self):
        return self.algebra.presentation

    def generators(self) -> list[Word]:
        return self.algebra.generators()

    def coproduct_basis(self, word: Word) -> Tensor:
        """Δ of a word (normal or not), built letter by letter."""
        cached = self._delta_cache.get(word)
        if cached is not None:
            return cached
        prefix = self.coproduct_basis(word[:-1]) if len(word) > 1 else {(ONE, ONE): 1}
        out = tensor_multiply(self.field, self.algebra, self.algebra, prefix, self.delta_gen[word[-1]])
        self._delta_cache[word] = out
        return out

    def counit_basis(self, word: Word) -> int:
        field = self.field
        total = 1
        for g in word:
            total = field.mul(total, self.counit_gen[g])
            if not total:
                return 0
        return total

    def antipode_basis(self, word: Word) -> dict:
        """S(a_1 ... a_n) = S(a_n) ... S(a_1)."""
        cached = self._antipode_cache.get(word)
        if cached is not None:
            return cached
        rest = self.antipode_basis(word[1:]) if len(word) > 1 else {ONE: 1}
        out = self.algebra.multiply(rest, self.antipode_gen[word[0]])
        self._antipode_cache[word] = out
        return out

    def __repr__(self) -> str:
        return f"HopfStructure({self.name or '?'}, dim={self.dim})"


class TableHopf(HopfAlgebra):
    """All structure maps on an indexed basis."""

    def __init__(self, algebra: TableAlgebra, delta: dict[int, Tensor], counit: list[int], antipode: dict[int, dict]):
        self.algebra = algebra
        self.delta = delta
        self.counit_values = list(counit)
        self.antipode_values = antipode

    def coproduct_basis(self, key: int) -> Tensor:
        return self.delta.get(key, {})

    def counit_basis(self, key: int) -> int:
        return self.counit_values[key]

    def antipode_basis(self, key: int) -> dict:
        return self.antipode_values.get(key, {})

    def __repr__(self) -> str:
        return f"TableHopf({self.name or '?'}, dim={self.dim})"


def _normalize_tensor(algebra: FinBasisAlgebra, t: Tensor) -> Tensor:
    nf = algebra.word_value
    return tensor_apply(algebra.field, t, nf, nf)


def table_hopf(h: HopfAlgebra) -> TableHopf:
    """Re-express any Hopf algebra on indices 0..dim-1."""
    from hopfext.services.algebra.table import table_of

    index = {w: i for i, w in enumerate(h.basis)}
    delta = {
        index[w]: {(index[a], index[b]): c for (a, b), c in h.coproduct_basis(w).items()}
        for w in h.basis
    }
    counit = [h.counit_basis(w) for w in h.basis]
    antipode = {index[w]: {index[k]: c for k, c in h.antipode_basis(w).items()} for w in h.basis}
    return TableHopf(table_of(h.algebra), delta, counit, antipode)


def grouplike_inverse(algebra: FinBasisAlgebra, g: int) -> dict:
    """g^{-1} = g^{n-1} where n is the order of the grouplike generator g."""
    letter = {(g,): 1}
    power = letter
    for _ in range(algebra.dim + 1):
        nxt = algebra.multiply(power, letter)
        if nxt == algebra.unit():
            return power
        power = nxt
    raise PreconditionError(f"generator {algebra.names[g]} has no finite order")


def delta_extend(h: HopfStructure, elt: dict) -> Tensor:
    """Δ of an element, as the multiplicative extension of Δ on generators."""
    return h.coproduct(elt)


def hopf_from_dict(data: dict, name: str = "") -> HopfStructure:
    """Build a HopfStructure from a parsed presentation file with [coalgebra]/[antipode] sections."""
    pres = presentation_from_dict(data, name=name)
    alg = FinBasisAlgebra.build(pres)
    parser = pres.parser()
    field = pres.field
    coalg = data.get("coalgebra", {})
    antipode = data.get("antipode", {})
    counit = data.get("counit", {})

    delta_gen, counit_gen, antipode_gen = {}, {}, {}
    for g in pres.generators:
        if g.grouplike and g.name not in coalg:
            delta_gen[g.index] = {((g.index,), (g.index,)): 1}
            counit_gen[g.index] = 1
        elif g.name in coalg:
            delta_gen[g.index] = parser.parse_tensor(coalg[g.name])
            counit_gen[g.index] = field.scalar(int(counit.get(g.name, 1 if g.grouplike else 0)))
        else:
            raise ParseError(f"[coalgebra] has no entry for {g.name}")
        if g.name in antipode:
            antipode_gen[g.index] = parser.parse(antipode[g.name]).terms
        elif g.grouplike:
            antipode_gen[g.index] = grouplike_inverse(alg, g.index)
        else:
            raise ParseError(f"[antipode] has no entry for {g.name}")
    return HopfStructure(alg, delta_gen, counit_gen, antipode_gen)


def load_hopf(path: str | Path) -> HopfStructure:
    path = Path(path)
    try:
        data = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"{path.name}: {e}") from e
    return hopf_from_dict(data, name=path.stem)


def sub_hopf(h: HopfStructure, gens: list[int], expected_dimension: int | None = None, name: str = "") -> HopfStructure:
    """Hopf subalgebra generated by some generators of h.

    It is presented by the relations of h written in those letters only, so the
    result is the subalgebra exactly when those relations already define it;
    ``expected_dimension`` makes a mismatch visible in the log.
    """
    pres = h.presentation
    field = pres.field
    keep = {g: i for i, g in enumerate(gens)}

    def inside(word: Word) -> bool:
        return all(g in keep for g in word)

    def restrict(vec: dict) -> dict:
        if not all(inside(w) for w in vec):
            raise PreconditionError(f"{h.algebra.format(vec)} leaves the chosen generators")
        return {tuple(keep[g] for g in w): c for w, c in vec.items()}

    rels = [
        NcPolynomial(field, restrict(rel.terms))
        for rel in pres.relations if all(inside(w) for w in rel.terms)
    ]
    chosen = [pres.generators[g] for g in gens]
    sub = make_presentation(
        field, [g.name for g in chosen], rels,
        degrees=[g.degree for g in chosen] if pres.graded else None,
        precedence=[pres.generators[g].name for g in pres.order.precedence if g in keep],
        grouplike={g.name for g in chosen if g.grouplike},
        expected_dimension=expected_dimension,
        degree_bound=pres.degree_bound,
        name=name,
    )
    alg = FinBasisAlgebra.build(sub)
    delta, counit, antipode = {}, {}, {}
    for g in gens:
        i = keep[g]
        tensor = {}
        for (u, v), c in h.delta_gen[g].items():
            if not (inside(u) and inside(v)):
                raise PreconditionError(f"Δ({pres.generators[g].name}) leaves the chosen generators")
            tensor[(tuple(keep[x] for x in u), tuple(keep[x] for x in v))] = c
        delta[i] = tensor
        counit[i] = h.counit_gen[g]
        antipode[i] = restrict(h.antipode_gen[g])
    return HopfStructure(alg, delta, counit, antipode, grouplikes={keep[g] for g in h.grouplikes if g in keep})
