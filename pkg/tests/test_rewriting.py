import numpy as np
import pytest

from hopfext.core.errors import InconclusiveError, PreconditionError
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.presentation import make_presentation
from hopfext.services.algebra.rewriting import complete
from hopfext.services.nichols.data import braiding_data, laestrygonian
from hopfext.services.nichols.presentation import nichols_algebra

NF_SAMPLES = 1000
ASSOC_SAMPLES = 500


def test_jordan_plane(jordan):
    assert jordan.dim == 9
    assert jordan.dimension_matches
    assert jordan.hilbert_series() == [1, 2, 3, 2, 1]
    assert jordan.format(jordan.element("y*x")) == "x*y + x^2"


def test_jordan_plane_p5(f5):
    alg = nichols_algebra(braiding_data(f5, 1, 1))
    assert alg.dim == 25
    assert alg.hilbert_series() == [1, 2, 3, 4, 5, 4, 3, 2, 1]


def test_laestrygonian_ghost_one(laestry):
    assert laestry.dim == 81
    assert laestry.dimension_matches


def test_laestrygonian_ghost_two(f3):
    assert nichols_algebra(laestrygonian(f3, ghost=2)).dim == 243


@pytest.mark.slow
def test_laestrygonian_p5(f5):
    assert nichols_algebra(laestrygonian(f5, ghost=1)).dim == 625


@pytest.mark.slow
def test_general_two_blocks(f3):
    d = braiding_data(f3, 2, 3, a=[[1, 1]])
    assert nichols_algebra(d).dim == 6561


def _random_polynomial(alg, rng) -> dict:
    field = alg.field
    poly: dict = {}
    for _ in range(int(rng.integers(1, 5))):
        word = tuple(int(g) for g in rng.integers(0, alg.ngens, size=int(rng.integers(0, 9))))
        poly[word] = field.add(poly.get(word, 0), int(rng.integers(1, field.order)))
    return {w: c for w, c in poly.items() if c}


@pytest.mark.parametrize("name", ["jordan", "laestry"])
def test_normal_form_is_idempotent(name, request):
    alg = request.getfixturevalue(name)
    rng = np.random.default_rng(7)
    for _ in range(NF_SAMPLES):
        nf = alg.normal_form(_random_polynomial(alg, rng))
        assert alg.normal_form(nf) == nf
        assert all(w in alg.index for w in nf)


def _associative(alg, a, b, c) -> bool:
    left = alg.multiply(alg.mul_basis(a, b), {c: 1})
    right = alg.multiply({a: 1}, alg.mul_basis(b, c))
    return left == right


def test_associativity_all_triples(jordan):
    basis = jordan.basis
    assert all(_associative(jordan, a, b, c) for a in basis for b in basis for c in basis)


@pytest.mark.slow
def test_associativity_all_triples_laestrygonian(laestry):
    basis = laestry.basis
    assert all(_associative(laestry, a, b, c) for a in basis for b in basis for c in basis)


def test_associativity_sampled_above_100(f3):
    alg = nichols_algebra(laestrygonian(f3, ghost=2))
    assert alg.dim > 100
    rng = np.random.default_rng(11)
    basis = alg.basis
    for i, j, k in rng.integers(0, len(basis), size=(ASSOC_SAMPLES, 3)):
        assert _associative(alg, basis[int(i)], basis[int(j)], basis[int(k)])


def test_truncated_polynomial(f3):
    pres = make_presentation(f3, ["x"], ["x^3"], expected_dimension=3, degree_bound=6)
    alg = FinBasisAlgebra.build(pres)
    assert alg.basis == [(), (0,), (0, 0)]
    assert alg.dimension_matches


def test_infinite_quotient_is_inconclusive(f3):
    pres = make_presentation(f3, ["x", "y"], ["x*y - y*x"], degree_bound=4)
    with pytest.raises(InconclusiveError):
        complete(pres)


def test_bound_below_relations(f3):
    pres = make_presentation(f3, ["x"], ["x^3"])
    with pytest.raises(PreconditionError):
        complete(pres, degree_bound=2)
