import pytest

from hopfext.core.enums import CheckMode, Verdict
from hopfext.core.errors import BudgetError
from hopfext.services.hopf.axioms import check_hopf
from hopfext.services.hopf.convolution import convolution_inverse, is_convolution_inverse
from hopfext.services.hopf.dual import dual_hopf
from hopfext.services.hopf.groups import AbelianGroup, cyclic_power_group, group_algebra
from hopfext.services.hopf.maps import GeneratorMap, identity_map, is_hopf_map
from hopfext.services.hopf.structure import delta_extend, hopf_from_dict, load_hopf, sub_hopf, table_hopf


SWEEDLER = {
    "field": {"p": 3},
    "algebra": {"name": "sweedler", "order": ["x", "g"], "expected_dimension": 4, "degree_bound": 8},
    "generators": [{"name": "x"}, {"name": "g", "grouplike": True}],
    "relations": {"rels": ["x^2", "g^2 - 1", "g*x + x*g"]},
    "coalgebra": {"x": "x ⊗ 1 + g ⊗ x"},
    "counit": {"x": 0},
    "antipode": {"x": "-g*x"},
}


def test_jordan_bosonization_exhaustive(jordan_hopf):
    assert jordan_hopf.dim == 27
    report = check_hopf(jordan_hopf, CheckMode.EXHAUSTIVE)
    assert report.passed, report.failures()
    assert {c.name for c in report.checks} == {
        "well_defined", "grouplikes", "coassociativity", "counit", "antipode", "multiplicative",
    }


@pytest.mark.slow
def test_laestrygonian_bosonization(laestry_hopf):
    assert laestry_hopf.dim == 729
    report = check_hopf(laestry_hopf)
    assert report.mode == CheckMode.GENERATORS
    assert report.passed


@pytest.mark.slow
def test_exhaustive_cap(laestry_hopf):
    with pytest.raises(BudgetError):
        check_hopf(laestry_hopf, CheckMode.EXHAUSTIVE)


def test_hopf_from_dict():
    sweedler = hopf_from_dict(SWEEDLER)
    assert sweedler.dim == 4
    assert check_hopf(sweedler, CheckMode.EXHAUSTIVE).passed


def test_load_hopf_file(tmp_path):
    path = tmp_path / "sweedler.toml"
    path.write_text(
        "[field]\np = 3\n\n[algebra]\norder = [\"x\", \"g\"]\nexpected_dimension = 4\ndegree_bound = 8\n\n"
        "[[generators]]\nname = \"x\"\n\n[[generators]]\nname = \"g\"\ngrouplike = true\n\n"
        "[relations]\nrels = [\"x^2\", \"g^2 - 1\", \"g*x + x*g\"]\n\n"
        "[coalgebra]\nx = \"x ⊗ 1 + g ⊗ x\"\n\n[counit]\nx = 0\n\n[antipode]\nx = \"-g*x\"\n",
        encoding="utf-8",
    )
    sweedler = load_hopf(path)
    assert sweedler.dim == 4
    assert sweedler.name == "sweedler"
    assert check_hopf(sweedler, CheckMode.EXHAUSTIVE).passed


def test_delta_extend_matches_basis_coproduct(jordan_hopf):
    for w in jordan_hopf.basis[:6]:
        assert delta_extend(jordan_hopf, {w: 1}) == jordan_hopf.coproduct_basis(w)


def test_wrong_antipode_is_reported():
    broken = dict(SWEEDLER, antipode={"x": "g*x"})
    report = check_hopf(hopf_from_dict(broken), CheckMode.EXHAUSTIVE)
    assert report.verdict == Verdict.FAIL
    assert not report.check("antipode").passed


def test_antipode_is_convolution_inverse_of_identity(jordan_hopf):
    ident = identity_map(jordan_hopf)
    s = convolution_inverse(ident, jordan_hopf)
    for w in jordan_hopf.basis:
        assert s.apply_basis(w) == jordan_hopf.antipode_basis(w)
    assert is_convolution_inverse(ident, s, jordan_hopf)


def test_dual_and_double_dual(jordan_hopf):
    dual = dual_hopf(jordan_hopf)
    assert check_hopf(dual).passed
    original = table_hopf(jordan_hopf)
    double = dual_hopf(dual)
    assert double.algebra.table == original.algebra.table
    assert double.counit_values == original.counit_values


def test_group_algebra(f5):
    group = AbelianGroup((5, 2))
    kg = group_algebra(f5, group)
    assert kg.dim == 10
    assert kg.is_cocommutative()
    assert check_hopf(kg, CheckMode.EXHAUSTIVE).passed


def test_sub_hopf_of_grouplikes(jordan_hopf):
    g = jordan_hopf.algebra.ngens - 1
    kg = sub_hopf(jordan_hopf, [g], expected_dimension=3)
    assert kg.dim == 3
    inclusion = GeneratorMap(kg, jordan_hopf, {0: {(g,): 1}})
    assert is_hopf_map(inclusion) == (True, None)


def test_cyclic_group_orders():
    group = cyclic_power_group(6, 2)
    assert group.order == 36
    assert group.element_order((2, 3)) == 6
    assert group.format((1, 2)) == "g1*g2^2"
