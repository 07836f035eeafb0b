import pytest

from hopfext.core.errors import VerificationError
from hopfext.services.nichols.bosonization import bosonization_presentation, bosonize, sch_coproduct_check
from hopfext.services.nichols.braided import Realization, realize


def test_jordan_bosonization(jordan_hopf):
    alg = jordan_hopf.algebra
    assert alg.names == ["x", "y", "g"]
    assert jordan_hopf.dim == 27
    assert alg.dimension_matches
    x, g = 0, 2
    assert jordan_hopf.coproduct_basis((x,)) == {((x,), ()): 1, ((g,), (x,)): 1}
    assert jordan_hopf.antipode_basis((x,)) == alg.normal_form({(g, g, x): 2})


def test_group_action_relations(jordan_hopf):
    alg = jordan_hopf.algebra
    # g y g^-1 = y + x
    assert alg.element("g*y") == alg.element("y*g + x*g")
    assert alg.element("g*x") == alg.element("x*g")


def test_larger_group(jordan_hopf_f6):
    assert jordan_hopf_f6.dim == 54


def test_presentation_declares_expected_dimension(jordan, jordan_data):
    pres = bosonization_presentation(jordan.presentation, realize(jordan_data, 3))
    assert pres.expected_dimension == 27
    assert pres.names[-1] == "g"


def test_broken_realization_is_rejected(jordan, jordan_data):
    good = realize(jordan_data, 3)
    actions = [{0: {0: 1}, 1: {1: 1}}]
    with pytest.raises(VerificationError):
        bosonize(jordan, Realization(good.space, 3, actions))


@pytest.mark.slow
@pytest.mark.parametrize("n", [(0,), (1,)])
def test_sch_coproduct(laestry_hopf, laestry_data, n):
    ok, witness = sch_coproduct_check(laestry_hopf, laestry_data, 1, n)
    assert ok, witness
