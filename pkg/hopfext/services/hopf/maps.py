"""Linear maps between finite-dimensional (Hopf) algebras."""
from __future__ import annotations

from typing import Callable

from hopfext.core.linalg import EchelonBasis, axpy
from hopfext.services.algebra.words import ONE
from hopfext.services.hopf.tensor import tensor_apply


def _algebra(obj):
    return obj.algebra if hasattr(obj, "algebra") and obj.algebra is not None else obj


class LinearMap:
    """A linear map given column by column on the source basis.

    ``rule`` computes a column on demand; computed columns are cached.
    """

    def __init__(self, source, target, columns: dict | None = None, rule: Callable | None = None, name: str = ""):
        self.source = source
        self.target = target
        self.columns = dict(columns or {})
        self.rule = rule
        self.name = name

    @property
    def field(self):
        return _algebra(self.target).field

    def apply_basis(self, key) -> dict:
        col = self.columns.get(key)
        if col is None:
            col = self.rule(key) if self.rule else {}
            self.columns[key] = col
        return col

    def apply(self, vec: dict) -> dict:
        field = self.field
        out: dict = {}
        for k, c in vec.items():
            axpy(field, out, c, self.apply_basis(k))
        return out

    def __call__(self, vec: dict) -> dict:
        return self.apply(vec)

    def compose(self, inner: "LinearMap", name: str = "") -> "LinearMap":
        """self ∘ inner."""
        return LinearMap(inner.source, self.target, rule=lambda k: self.apply(inner.apply_basis(k)),
                         name=name or f"{self.name}∘{inner.name}")

    def rank(self) -> int:
        basis = EchelonBasis(self.field)
        for k in _algebra(self.source).basis:
            basis.add(self.apply_basis(k))
        return basis.rank

    def image_basis(self) -> EchelonBasis:
        basis = EchelonBasis(self.field)
        for k in _algebra(self.source).basis:
            basis.add(self.apply_basis(k))
        return basis

    def kernel(self) -> list[dict]:
        """Kernel as combinations of source basis keys."""
        basis = EchelonBasis(self.field, track=True)
        for k in _algebra(self.source).basis:
            basis.add(self.apply_basis(k), tag=k)
        return basis.relations

    def matrix(self) -> list[list[int]]:
        src = _algebra(self.source).basis
        tgt = _algebra(self.target).basis
        index = {w: i for i, w in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, k in enumerate(src):
            for w, c in self.apply_basis(k).items():
                rows[index[w]][j] = c
        return rows

    def __repr__(self) -> str:
        return f"LinearMap({self.name or '?'})"


class GeneratorMap(LinearMap):
    """Algebra map determined by images of the source generators (words extend multiplicatively)."""

    def __init__(self, source, target, images: dict[int, dict], name: str = ""):
        self.images = images
        super().__init__(source, target, rule=self._word_image, name=name)

    def _word_image(self, word) -> dict:
        tgt = _algebra(self.target)
        if not word:
            return tgt.unit()
        prefix = self.apply_basis(word[:-1]) if len(word) > 1 else tgt.unit()
        return tgt.multiply(prefix, self.images[word[-1]])

    def relation_defect(self) -> tuple[bool, str | None]:
        """Every defining relation of the source must map to 0."""
        src = _algebra(self.source)
        field = self.field
        pres = src.presentation
        for rel in pres.relations:
            out: dict = {}
            for w, c in rel.terms.items():
                axpy(field, out, c, self._word_image(w))
            if out:
                return False, f"relation {rel.format(pres.names, pres.order)} maps to {_algebra(self.target).format(out)}"
        return True, None


def identity_map(obj, name: str = "id") -> LinearMap:
    return LinearMap(obj, obj, rule=lambda k: {k: 1}, name=name)


def is_algebra_map(f: LinearMap, exhaustive: bool = False) -> tuple[bool, str | None]:
    """Unit and multiplicativity; generator maps are checked on relations unless ``exhaustive``."""
    src, tgt = _algebra(f.source), _algebra(f.target)
    if f.apply(src.unit()) != tgt.unit():
        return False, "unit not preserved"
    if isinstance(f, GeneratorMap) and not exhaustive:
        return f.relation_defect()
    field = f.field
    for u in src.basis:
        fu = f.apply_basis(u)
        for v in src.basis:
            lhs = f.apply(src.mul_basis(u, v))
            rhs = tgt.multiply(fu, f.apply_basis(v))
            if axpy(field, dict(lhs), field.neg(1), rhs):
                return False, f"f({src.format_word(u)}·{src.format_word(v)}) ≠ f({src.format_word(u)})f({src.format_word(v)})"
    return True, None


def is_coalgebra_map(f: LinearMap, keys: list | None = None) -> tuple[bool, str | None]:
    """(f⊗f)Δ = Δf and ε∘f = ε, on ``keys`` (all source basis elements by default).

    Source and target must be Hopf algebras (objects with coproduct/counit).
    """
    src, tgt = f.source, f.target
    field = f.field
    keys = list(_algebra(src).basis) if keys is None else keys
    for k in keys:
        lhs = tensor_apply(field, src.coproduct_basis(k), f.apply_basis, f.apply_basis)
        rhs = tgt.coproduct(f.apply_basis(k))
        if axpy(field, lhs, field.neg(1), rhs):
            return False, f"Δ fails on {_algebra(src).format_word(k)}"
        if tgt.counit(f.apply_basis(k)) != src.counit_basis(k):
            return False, f"ε fails on {_algebra(src).format_word(k)}"
    return True, None


def is_hopf_map(f: GeneratorMap) -> tuple[bool, str | None]:
    """Algebra map plus coalgebra map on generators (both sides of Δf = (f⊗f)Δ are algebra maps)."""
    ok, witness = is_algebra_map(f)
    if not ok:
        return ok, witness
    return is_coalgebra_map(f, keys=[ONE] + _algebra(f.source).generators())
