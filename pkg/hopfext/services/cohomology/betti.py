"""
Betti numbers b_n = dim Ext^n_A(k, k).

Two independent methods: the reduced bar complex (A+)^{⊗n} with
∂(a_1|...|a_n) = sum_i (-1)^i a_1|...|a_i a_{i+1}|...|a_n, and a minimal
graded free resolution of k for connected graded A. Both split by internal
degree when A is graded.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict

from hopfext.api.schemas import BettiTable
from hopfext.core.config import settings
from hopfext.core.enums import BettiMethod
from hopfext.core.errors import BudgetError, PreconditionError
from hopfext.core.linalg import EchelonBasis, axpy, kernel, rank
from hopfext.core.logger import log, log_warn
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.cohomology.augmented import AugmentedAlgebra, GroupAction

Chain = tuple[int, ...]


def _augmented(a: AugmentedAlgebra | FinBasisAlgebra) -> AugmentedAlgebra:
    return a if isinstance(a, AugmentedAlgebra) else AugmentedAlgebra(a)


def chain_cap(budget_mb: int | None = None) -> int:
    """Chains the bar method may hold: bar_budget, tightened by the memory budget."""
    entries = (budget_mb or settings.budget_mb) * 2**20 // settings.bytes_per_chain
    return min(settings.bar_budget, entries)


def minimal_cap(budget_mb: int | None = None) -> int:
    entries = (budget_mb or settings.budget_mb) * 2**20 // settings.bytes_per_chain
    return min(settings.minimal_dim_cap, math.isqrt(entries))


# ── bar complex ──

def bar_boundary(a: AugmentedAlgebra, chain: Chain) -> dict[Chain, int]:
    field = a.field
    out: dict = {}
    for i in range(len(chain) - 1):
        sign = 1 if i % 2 else field.neg(1)
        head, tail = chain[:i], chain[i + 2:]
        for c, coef in a.product(chain[i], chain[i + 1]).items():
            axpy(field, out, field.mul(sign, coef), {head + (c,) + tail: 1})
    return out


def bar_boundary_vec(a: AugmentedAlgebra, vec: dict[Chain, int]) -> dict[Chain, int]:
    out: dict = {}
    for chain, c in vec.items():
        axpy(a.field, out, c, bar_boundary(a, chain))
    return out


def _chains_by_degree(a: AugmentedAlgebra, n: int) -> dict[int, list[Chain]]:
    buckets: dict[int, list[Chain]] = defaultdict(list)
    degrees = [a.degree(i) for i in range(a.dim_plus)]
    for chain in itertools.product(range(a.dim_plus), repeat=n):
        buckets[sum(degrees[i] for i in chain)].append(chain)
    return buckets


def _boundary_rank(a: AugmentedAlgebra, n: int) -> int:
    """rank of ∂_n: (A+)^{⊗n} -> (A+)^{⊗n-1}."""
    if n <= 1:
        return 0
    return sum(rank(a.field, (bar_boundary(a, c) for c in chains)) for chains in _chains_by_degree(a, n).values())


def bar_square_defect(a: AugmentedAlgebra, n: int) -> dict | None:
    """First chain of length n with ∂∂ != 0, with its value; None when ∂∂ = 0."""
    for chain in itertools.product(range(a.dim_plus), repeat=n):
        value = bar_boundary_vec(a, bar_boundary(a, chain))
        if value:
            return {"chain": chain, "value": value}
    return None


def bar_betti(alg: AugmentedAlgebra | FinBasisAlgebra, max_degree: int, budget_mb: int | None = None) -> BettiTable:
    """b_n = dim (A+)^{⊗n} - rank ∂_n - rank ∂_{n+1}; stops early when (dim A+)^{n+1} exceeds the bar budget."""
    a = _augmented(alg)
    d = a.dim_plus
    cap = chain_cap(budget_mb)
    betti = [1]
    cutoff = None
    ranks = {1: 0}
    for n in range(1, max_degree + 1):
        if d ** (n + 1) > cap:
            cutoff = n
            log_warn(f"bar complex for {a.name} cut at degree {n}: (dim A+)^{n + 1} = {d ** (n + 1)}")
            break
        ranks[n + 1] = _boundary_rank(a, n + 1)
        betti.append(d ** n - ranks[n] - ranks[n + 1])
        log("BETTI", method="bar", algebra=a.name, n=n, b=betti[-1])
    note = f"(dim A+)^{cutoff + 1} = {d ** (cutoff + 1)} exceeds the bar budget" if cutoff else None
    return BettiTable(algebra=a.name, method=BettiMethod.BAR, betti=betti, cutoff=cutoff, note=note)


# ── minimal graded resolution ──

Free = dict  # (summand index, word) -> coefficient


def _left_multiply(alg: FinBasisAlgebra, word, vec: Free) -> Free:
    field = alg.field
    out: Free = {}
    for (i, u), c in vec.items():
        for w, cw in alg.mul_basis(word, u).items():
            axpy(field, out, field.mul(c, cw), {(i, w): 1})
    return out


def _minimal_generators(a: AugmentedAlgebra, module: list[tuple[int, Free]]) -> list[tuple[int, Free]]:
    """Homogeneous generators of K modulo A+ K, degree by degree."""
    alg = a.algebra
    letters = [((g,), a.grading((g,))) for g in range(alg.ngens)]
    by_degree: dict[int, list[Free]] = defaultdict(list)
    for deg, vec in module:
        by_degree[deg].append(vec)
    decomposable: dict[int, list[Free]] = defaultdict(list)
    for deg, vec in module:
        for word, ld in letters:
            image = _left_multiply(alg, word, vec)
            if image:
                decomposable[deg + ld].append(image)
    gens = []
    for deg in sorted(by_degree):
        span = EchelonBasis(a.field)
        span.extend(decomposable.get(deg, []))
        for vec in by_degree[deg]:
            if span.add(vec):
                gens.append((deg, vec))
    return gens


def _kernel_of(a: AugmentedAlgebra, gens: list[tuple[int, Free]]) -> list[tuple[int, Free]]:
    """Homogeneous basis of ker(A^{len gens} -> ambient, e_j -> gens[j])."""
    alg = a.algebra
    buckets: dict[int, list[tuple[int, tuple]]] = defaultdict(list)
    for j, (deg, _) in enumerate(gens):
        for w in alg.basis:
            buckets[deg + a.grading(w)].append((j, w))
    out = []
    for deg, keys in sorted(buckets.items()):
        images = [_left_multiply(alg, w, gens[j][1]) for j, w in keys]
        for combo in kernel(a.field, images):
            out.append((deg, {keys[i]: c for i, c in combo.items()}))
    return out


def minimal_graded_betti(alg: AugmentedAlgebra | FinBasisAlgebra, max_degree: int,
                         budget_mb: int | None = None) -> BettiTable:
    """b_n = number of minimal generators of the (n-1)-st syzygy of k."""
    a = _augmented(alg)
    if not a.connected:
        raise PreconditionError(f"{a.name} is not connected graded; use the bar method")
    cap = minimal_cap(budget_mb)
    if a.algebra.dim > cap:
        raise BudgetError(f"minimal resolution capped at dim {cap}, got {a.algebra.dim}")
    module = [(a.grading(w), {(0, w): 1}) for w in a.plus]
    betti = [1]
    for n in range(1, max_degree + 1):
        gens = _minimal_generators(a, module)
        betti.append(len(gens))
        log("BETTI", method="minimal", algebra=a.name, n=n, b=len(gens))
        if n == max_degree or not gens:
            betti += [0] * (max_degree - n)
            break
        module = _kernel_of(a, gens)
    return BettiTable(algebra=a.name, method=BettiMethod.MINIMAL, betti=betti)


# ── invariants ──

def _act_chain(field, rows: list[dict[int, int]], chain: Chain) -> dict[Chain, int]:
    out: dict = {(): 1}
    for i in chain:
        nxt: dict = {}
        for head, c in out.items():
            for j, cj in rows[i].items():
                axpy(field, nxt, field.mul(c, cj), {head + (j,): 1})
        out = nxt
    return out


def _invariant_chains(a: AugmentedAlgebra, action: dict, n: int) -> dict[int, list[dict]]:
    field = a.field
    out = {}
    for deg, chains in _chains_by_degree(a, n).items():
        span = EchelonBasis(field)
        for chain in chains:
            avg: dict = {}
            for rows in action.values():
                axpy(field, avg, 1, _act_chain(field, rows, chain))
            span.add(avg)
        out[deg] = span.basis()
    return out


def invariant_betti(alg: AugmentedAlgebra | FinBasisAlgebra, action: GroupAction, max_degree: int,
                    budget_mb: int | None = None) -> BettiTable:
    """dim H^n(A, k)^Γ through the averaged subcomplex of the bar complex; needs kΓ semisimple."""
    a = _augmented(alg)
    order = action.group.order
    if order % a.field.p == 0:
        raise PreconditionError(
            f"p={a.field.p} divides |Γ|={order}: kΓ is not semisimple, so invariants of cohomology are not computed"
        )
    on_plus = action.on_plus(a)
    for rows in on_plus.values():
        for i, row in enumerate(rows):
            if any(a.degree(j) != a.degree(i) for j in row):
                raise PreconditionError("the group action does not preserve the internal grading")

    d = a.dim_plus
    dims, ranks = {}, {1: 0}
    invariant = {}
    betti = [1]
    cutoff = None

    def subcomplex(n: int) -> dict[int, list[dict]]:
        if n not in invariant:
            invariant[n] = _invariant_chains(a, on_plus, n)
            dims[n] = sum(len(v) for v in invariant[n].values())
        return invariant[n]

    for n in range(1, max_degree + 1):
        if d ** (n + 1) * order > chain_cap(budget_mb):
            cutoff = n
            break
        subcomplex(n)
        ranks[n + 1] = sum(
            rank(a.field, (bar_boundary_vec(a, v) for v in vecs)) for vecs in subcomplex(n + 1).values()
        )
        betti.append(dims[n] - ranks[n] - ranks[n + 1])
        log("BETTI", method="invariant", algebra=a.name, n=n, b=betti[-1], group=order)
    note = f"invariants under a group of order {order}"
    return BettiTable(algebra=a.name, method=BettiMethod.BAR, betti=betti, cutoff=cutoff, note=note)
