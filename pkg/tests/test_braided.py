import pytest

from hopfext.core.errors import PreconditionError
from hopfext.services.hopf.groups import AbelianGroup
from hopfext.services.nichols.braided import (
    braided_from_ab_triple, braided_from_data, check_braid_equation, realize, verify_realization,
)
from hopfext.services.nichols.data import (
    AbTriple, a_from_ghost, ab_triple_of, braiding_data, ghost_from_a, grading_form, is_quantum_linear, laestrygonian,
)
from hopfext.services.nichols.yd import braided_from_yd_triple, check_yd_pair, check_yd_triple


def test_jordan_braiding(jordan_data):
    space = braided_from_data(jordan_data)
    x, y = 0, 1
    assert space.braiding[(x, y)] == {(y, x): 1, (x, x): 1}
    assert space.braiding[(y, x)] == {(x, y): 1}
    assert space.is_invertible()
    assert check_braid_equation(space) == (True, None)


@pytest.mark.parametrize("ghost", [1, 2])
def test_laestrygonian_braid_equation(f3, ghost):
    space = braided_from_data(laestrygonian(f3, ghost=ghost, q=2))
    assert space.dim == 3
    assert check_braid_equation(space)[0]


def test_ab_triple_matches_data(f5):
    d = braiding_data(f5, 2, 3, a=[[2, 1]])
    triple = ab_triple_of(d)
    assert triple.n == (2, 2, 1)
    assert triple.is_normalized()
    assert triple.is_nilpotent()
    assert triple.matrix(2, 0) == [[0, 2], [0, 0]]
    assert braided_from_ab_triple(triple).braiding == braided_from_data(d).braiding


@pytest.mark.parametrize("p", [3, 5, 7])
def test_ghost_round_trip(p):
    for ghost in range(1, p):
        assert ghost_from_a(a_from_ghost(ghost, p), p) == ghost
    assert ghost_from_a(0, p) == 0


def test_grading_form_is_quantum_linear(f3):
    d = laestrygonian(f3, ghost=1, q=2)
    form = grading_form(d)
    assert len(form) == 3
    assert is_quantum_linear(f3, form) == (True, None)


def test_realization(jordan_data):
    r = realize(jordan_data, 3)
    assert r.rank == 1
    assert verify_realization(r).passed
    assert r.act(0, {1: 1}) == {1: 1, 0: 1}


def test_realization_needs_multiple_of_p(jordan_data):
    with pytest.raises(PreconditionError):
        realize(jordan_data, 4)


def test_yd_triple_gives_jordan_block(f3, jordan_data):
    group = AbelianGroup((3,))
    report = check_yd_triple(f3, group, (1,), [1], [1])
    assert report.passed
    assert report.forces_p_divides_ord_g
    space = braided_from_yd_triple(f3, group, (1,), [1], [1])
    assert space.braiding == braided_from_data(jordan_data).braiding


def test_yd_triple_on_order_prime_to_p(f3):
    report = check_yd_triple(f3, AbelianGroup((2,)), (1,), [1], [1])
    assert not report.check("derivation").passed
    assert not report.forces_p_divides_ord_g


def test_yd_pair_character(f5):
    group = AbelianGroup((4,))
    assert check_yd_pair(f5, group, (1,), [2]).passed
    assert not check_yd_pair(f5, AbelianGroup((3,)), (1,), [2]).passed


def test_ab_triple_rejects_unsorted_blocks(f3):
    with pytest.raises(PreconditionError, match="non-increasing"):
        AbTriple(f3, (1, 2), ((1, 1), (1, 1)), {})
