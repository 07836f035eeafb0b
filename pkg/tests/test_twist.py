import pytest

from hopfext.core.errors import FieldError, PreconditionError
from hopfext.core.linalg import scale
from hopfext.services.hopf.structure import table_hopf
from hopfext.services.algebra.words import ONE
from hopfext.services.nichols.bosonization import braided_coproduct
from hopfext.services.nichols.braided import Realization, realize
from hopfext.services.nichols.data import laestrygonian
from hopfext.services.twist.cocycle import GroupCocycle, cocycle_from_matrices, trivial_cocycle, twist_equivalent
from hopfext.services.twist.twist import (
    check_shortcut, coalgebra_check, table_projection, twist_braided, twist_functor, twist_hopf, verify_twist_iso,
)

ONES = [[1, 1], [1, 1]]
MINUS = [[1, 2], [2, 1]]


def test_cocycle_from_matrices(f3):
    sigma = cocycle_from_matrices(f3, ONES, MINUS, 6)
    assert sigma.table == ((1, 2), (1, 1))
    assert sigma.check_identity(seed=3) == (True, None)
    form = sigma.alternating()
    assert form.table == ((1, 2), (2, 1))
    assert form.check(sigma.group, seed=3) == (True, None)


def test_cocycle_order_must_divide_f(f3):
    with pytest.raises(FieldError):
        GroupCocycle(f3, 3, ((2,),))


def test_cocycle_rejects_zero(f3):
    with pytest.raises(PreconditionError):
        GroupCocycle(f3, 6, ((0,),))


def test_inverse_is_pointwise(f3):
    sigma = cocycle_from_matrices(f3, ONES, MINUS, 6)
    inv = sigma.inverse()
    for a in sigma.group.elements[:8]:
        for b in sigma.group.elements[:8]:
            assert f3.mul(sigma.value(a, b), inv.value(a, b)) == 1
    assert trivial_cocycle(f3, 6, 2).is_trivial()


def test_twist_equivalence(f3):
    ok, sigma, witness = twist_equivalent(f3, ONES, MINUS, 6)
    assert ok and witness is None
    assert sigma.table == ((1, 2), (1, 1))
    ok, _, witness = twist_equivalent(f3, ONES, [[2, 1], [1, 1]], 6)
    assert not ok and "diagonal" in witness
    ok, _, witness = twist_equivalent(f3, ONES, [[1, 2], [1, 1]], 6)
    assert not ok and "preserved" in witness
    ok, _, _ = twist_equivalent(f3, ONES, MINUS, 3)
    assert not ok


def test_functor_on_cyclic_group_is_trivial(jordan_data):
    r = realize(jordan_data, 6)
    sigma = GroupCocycle(jordan_data.field, 6, ((2,),))
    twisted = twist_functor(r, sigma)
    assert twisted.actions == r.actions


def test_functor_size_mismatch(jordan_data):
    with pytest.raises(PreconditionError):
        twist_functor(realize(jordan_data, 6), GroupCocycle(jordan_data.field, 3, ((1,),)))


def test_braided_twist_scales_products(jordan):
    sigma = GroupCocycle(jordan.field, 6, ((2,),))
    twisted = twist_braided(jordan, sigma)
    assert twisted.dim == 9
    x, y = (0,), (1,)
    assert twisted.mul_basis(x, y) == scale(jordan.field, jordan.mul_basis(x, y), 2)
    assert twisted.mul_basis((), y) == jordan.mul_basis((), y)


def test_hopf_twist_round_trip(jordan_hopf_f6):
    sigma = GroupCocycle(jordan_hopf_f6.field, 6, ((2,),))
    twisted = twist_hopf(jordan_hopf_f6, sigma)
    assert twisted.dim == 54
    proj = table_projection(jordan_hopf_f6, sigma.group)
    back = twist_hopf(twisted, sigma.inverse(), projection=proj)
    original = table_hopf(jordan_hopf_f6)
    for i in original.basis:
        assert back.antipode_basis(i) == original.antipode_basis(i)
        for j in original.basis:
            assert back.algebra.mul_basis(i, j) == original.algebra.mul_basis(i, j)


def test_table_twist_needs_projection(jordan_hopf):
    with pytest.raises(PreconditionError):
        twist_hopf(table_hopf(jordan_hopf), GroupCocycle(jordan_hopf.field, 3, ((1,),)))


def test_scalar_shortcut_agrees(jordan_hopf_f6):
    sigma = GroupCocycle(jordan_hopf_f6.field, 6, ((2,),))
    assert check_shortcut(jordan_hopf_f6, sigma, seed=5) == (True, None)


def test_twist_iso_laestrygonian(f3):
    report = verify_twist_iso(laestrygonian(f3, ghost=1, q=2), 6, seed=11)
    assert report.passed, report.failures()
    assert report.dimensions == {"original": 81, "twisted": 81, "f": 6}
    assert report.hilbert_original == report.hilbert_twisted
    assert {c.name for c in report.checks} == {
        "cocycle", "alternating", "yd_module", "relations", "bijective", "coalgebra", "hilbert",
    }
    assert report.check("coalgebra").detail["words"] > 0


def test_braided_coproduct_counit(jordan, jordan_data):
    r = realize(jordan_data, 3)
    assert braided_coproduct(jordan, r, (0,)) == {((0,), ONE): 1, (ONE, (0,)): 1}
    for w in jordan.basis:
        delta = braided_coproduct(jordan, r, w)
        assert {b: c for (a, b), c in delta.items() if a == ONE} == {w: 1}
        assert {a: c for (a, b), c in delta.items() if b == ONE} == {w: 1}


def test_coalgebra_check_on_self_twist(jordan, jordan_data):
    r = realize(jordan_data, 6)
    sigma = GroupCocycle(jordan.field, 6, ((2,),))
    result = coalgebra_check(jordan, r, twist_braided(jordan, sigma), r)
    assert result.passed, result.witness


def test_coalgebra_check_detects_wrong_braiding(jordan, jordan_data):
    r = realize(jordan_data, 6)
    diagonal = Realization(r.space, 6, [{b: {b: 1} for b in range(r.space.dim)}])
    sigma = GroupCocycle(jordan.field, 6, ((2,),))
    result = coalgebra_check(jordan, r, twist_braided(jordan, sigma), diagonal)
    assert not result.passed
    assert "Δ(" in result.witness
