import pandas as pd
import pytest

from hopfext.api.schemas import BettiTable
from hopfext.core.enums import BettiMethod
from hopfext.core.errors import BudgetError, PreconditionError
from hopfext.services.algebra.finbasis import FinBasisAlgebra
from hopfext.services.algebra.presentation import make_presentation
from hopfext.services.cohomology.augmented import AugmentedAlgebra, GroupAction, action_from_realization
from hopfext.services.cohomology.betti import (
    bar_betti, bar_square_defect, chain_cap, invariant_betti, minimal_cap, minimal_graded_betti,
)
from hopfext.services.cohomology.probe import export_betti_csv, fgc_probe
from hopfext.services.hopf.groups import AbelianGroup
from hopfext.services.nichols.braided import realize


@pytest.fixture(scope="module")
def truncated(f3):
    pres = make_presentation(f3, ["x"], ["x^3"], expected_dimension=3, degree_bound=6, name="k[x]/x^3")
    return FinBasisAlgebra.build(pres)


@pytest.fixture(scope="module")
def sweedler_algebra(f3):
    pres = make_presentation(f3, ["x", "g"], ["x^2", "g^2 - 1", "g*x + x*g"], grouplike={"g"},
                             expected_dimension=4, degree_bound=8, name="sweedler")
    return FinBasisAlgebra.build(pres)


def _table(betti):
    return BettiTable(algebra="series", method=BettiMethod.BAR, betti=betti)


def test_truncated_polynomial_both_methods(truncated):
    bar = bar_betti(truncated, 6)
    minimal = minimal_graded_betti(truncated, 6)
    assert bar.betti == [1] * 7
    assert minimal.betti == [1] * 7
    assert bar.complete


def test_jordan_plane_methods_agree(jordan):
    aug = AugmentedAlgebra(jordan)
    assert aug.connected
    assert aug.dim_plus == 8
    bar = bar_betti(aug, 3)
    minimal = minimal_graded_betti(aug, 3)
    assert bar.betti[:3] == [1, 2, 3]
    assert bar.betti == minimal.betti


def test_bar_differential_squares_to_zero(jordan):
    aug = AugmentedAlgebra(jordan)
    assert bar_square_defect(aug, 3) is None


def test_bar_budget_cutoff(truncated, monkeypatch):
    from hopfext.core.config import settings

    monkeypatch.setattr(settings, "bar_budget", 20)
    table = bar_betti(truncated, 6)
    assert table.cutoff == 4
    assert table.betti == [1, 1, 1, 1]
    assert not table.complete
    assert "bar budget" in table.note


def test_non_connected_algebra(sweedler_algebra):
    aug = AugmentedAlgebra(sweedler_algebra)
    assert not aug.connected
    with pytest.raises(PreconditionError):
        minimal_graded_betti(aug, 3)
    assert bar_betti(aug, 4).betti == [1, 0, 1, 0, 1]


def test_invariants_under_sign_action(jordan):
    negate = GroupAction(AbelianGroup((2,)), [{0: {0: 2}, 1: {1: 2}}])
    table = invariant_betti(jordan, negate, 2)
    assert table.betti == [1, 0, 1]


def test_trivial_action_invariants_are_bar(jordan):
    trivial = GroupAction(AbelianGroup((2,)), [{}])
    assert invariant_betti(jordan, trivial, 2).betti == bar_betti(jordan, 2).betti


def test_invariants_bounded_by_bar(jordan):
    negate = GroupAction(AbelianGroup((2,)), [{0: {0: 2}, 1: {1: 2}}])
    invariant = invariant_betti(jordan, negate, 2).betti
    full = bar_betti(jordan, 2).betti
    assert all(b <= c for b, c in zip(invariant, full))


def test_invariants_need_semisimple_group_algebra(jordan):
    action = GroupAction(AbelianGroup((3,)), [{}])
    with pytest.raises(PreconditionError):
        invariant_betti(jordan, action, 2)


def test_realization_action_is_modular(jordan, jordan_data):
    action = action_from_realization(jordan, realize(jordan_data, 3))
    assert action.group.order == 3
    assert action.letters[0][1] == {1: 1, 0: 1}
    with pytest.raises(PreconditionError, match="divides"):
        invariant_betti(jordan, action, 2)


def test_fgc_probe_growth():
    assert fgc_probe(_table([1, 1, 1, 1, 1])).apparent_degree == 0
    linear = fgc_probe(_table([1, 2, 3, 4, 5]))
    assert linear.apparent_degree == 1
    assert linear.polynomial_fit
    exponential = fgc_probe(_table([1, 2, 4, 8, 16, 32]))
    assert exponential.apparent_degree is None
    assert not exponential.polynomial_fit
    assert exponential.heuristic


def test_fgc_probe_shortest_tables():
    linear = fgc_probe(_table([1, 2, 3, 4]))
    assert linear.apparent_degree == 1
    assert linear.differences == [[2, 3, 4], [1, 1]]
    assert fgc_probe(_table([1, 3, 3, 3])).apparent_degree == 0
    assert fgc_probe(_table([1, 2, 4, 8])).apparent_degree is None


def test_fgc_probe_needs_data():
    with pytest.raises(PreconditionError):
        fgc_probe(_table([1, 2, 3]))


def test_export_csv(truncated, tmp_path):
    tables = [bar_betti(truncated, 3), minimal_graded_betti(truncated, 3)]
    path = export_betti_csv(tables, tmp_path / "out" / "betti.csv")
    df = pd.read_csv(path)
    assert list(df.columns) == ["algebra", "method", "n", "b_n", "cutoff"]
    assert len(df) == 8
    assert set(df["method"]) == {"bar", "minimal"}


def test_memory_budget_tightens_caps(monkeypatch):
    from hopfext.core.config import settings

    monkeypatch.setattr(settings, "bytes_per_chain", 200)
    assert chain_cap() == settings.bar_budget
    assert chain_cap(1) == 2**20 // 200
    assert minimal_cap(1) == min(settings.minimal_dim_cap, 72)


def test_bar_cut_by_memory_budget(jordan):
    table = bar_betti(jordan, 5, budget_mb=1)
    assert table.cutoff == 4
    assert table.betti[:3] == [1, 2, 3]
    assert not table.complete


def test_minimal_over_budget(truncated, monkeypatch):
    from hopfext.core.config import settings

    monkeypatch.setattr(settings, "minimal_dim_cap", 2)
    with pytest.raises(BudgetError):
        minimal_graded_betti(truncated, 3)
