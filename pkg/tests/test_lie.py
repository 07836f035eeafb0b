import pytest

from hopfext.core.enums import CheckMode
from hopfext.core.errors import PreconditionError
from hopfext.core.linalg import sub
from hopfext.services.hopf.axioms import check_hopf
from hopfext.services.lie.enveloping import lie_element, restricted_enveloping
from hopfext.services.lie.ghost import build_l, build_l_from_data, ghost_matched_pair, iterated_ad, small_enveloping
from hopfext.services.lie.matched import (
    MatchedPairRL, double_cross, exact_factorization, lie_matched_pair_identities, verify_matched_pair,
)
from hopfext.services.lie.restricted import RestrictedLie, p_power, s_poly, verify_restricted

GHOSTS = [
    (3, [[1]], 3),
    (3, [[2]], 4),
    (3, [[1, 0]], 4),
    (3, [[1, 1]], 6),
    (5, [[1], [3]], 7),
]


def heisenberg(field, p_map=None):
    return RestrictedLie.from_table(field, ["a", "b", "c"], {(0, 1): {2: 1}}, p_map, name="heis")


@pytest.mark.parametrize("p, ghost, dim", GHOSTS)
def test_build_l_is_restricted(p, ghost, dim, f3, f5):
    field = f3 if p == 3 else f5
    lie = build_l(field, ghost)
    assert lie.dim == dim
    report = verify_restricted(lie, samples=50, seed=1)
    assert report.passed, report.failures()


@pytest.mark.parametrize("p, ghost, dim", GHOSTS)
def test_ghost_matched_pair(p, ghost, dim, f3, f5):
    field = f3 if p == 3 else f5
    lie = build_l(field, ghost)
    mp = ghost_matched_pair(lie)
    assert verify_matched_pair(mp).passed
    s = double_cross(mp)
    assert s.dim == lie.dim
    t = lie.module.t
    n = mp.g.dim
    for j in range(t):
        for k in range(n):
            expected = {idx - t: c for idx, c in lie.bracket_basis(j, t + k).items()}
            assert s.bracket_basis(n + j, k) == expected


def test_exact_factorization_recovers_action(f3):
    lie = build_l(f3, [[1, 1]])
    t = lie.module.t
    g_basis = [{i: 1} for i in range(t, lie.dim)]
    l_basis = [{j: 1} for j in range(t)]
    mp = exact_factorization(lie, g_basis, l_basis)
    assert mp.left == ghost_matched_pair(lie).left
    assert mp.right == {}


def test_exact_factorization_needs_complement(f3):
    lie = build_l(f3, [[1]])
    with pytest.raises(PreconditionError):
        exact_factorization(lie, [{1: 1}], [{1: 1}, {0: 1}])


def test_non_module_action_is_reported(f3):
    g = RestrictedLie(f3, ["v0", "v1"], {})
    n = RestrictedLie(f3, ["E1", "E2"], {})
    mp = MatchedPairRL(g, n, left={(0, 0): {1: 1}, (1, 1): {0: 1}})
    checks = {c.name: c.passed for c in lie_matched_pair_identities(mp)}
    assert checks["left_module"] is False
    assert checks["right_module"] is True


def test_small_enveloping_dimension(laestry_data):
    lie = build_l_from_data(laestry_data)
    u = small_enveloping(lie)
    assert u.dim == 3 ** lie.dim == 27
    assert check_hopf(u, CheckMode.EXHAUSTIVE).passed
    assert u.algebra.normal_form(iterated_ad(u, lie, 1, (1,))) != {}
    assert iterated_ad(u, lie, 1, (2,)) == {}


@pytest.mark.slow
def test_small_enveloping_two_blocks(f3):
    lie = build_l(f3, [[1, 1]])
    assert small_enveloping(lie).dim == 729


def test_p_operation_extension(f3):
    lie = heisenberg(f3, {0: {2: 1}})
    assert p_power(lie, {0: 2}) == {2: 2}
    assert verify_restricted(lie, samples=30).passed


def test_s_poly_coefficients(f3):
    lie = RestrictedLie.from_table(f3, ["h", "e"], {(0, 1): {1: 1}}, name="b2")
    assert s_poly(lie, 1, {1: 1}, {0: 1}) == {1: 1}
    assert s_poly(lie, 2, {1: 1}, {0: 1}) == {}
    with pytest.raises(ValueError):
        s_poly(lie, 3, {1: 1}, {0: 1})


def test_bad_p_operation(f3):
    report = verify_restricted(heisenberg(f3, {0: {0: 1}}), samples=10)
    assert not report.check("ad_p_basis").passed


def test_restricted_enveloping(f3):
    u = restricted_enveloping(heisenberg(f3))
    assert u.dim == 27
    assert check_hopf(u, CheckMode.EXHAUSTIVE).passed
    c = lie_element(u, {2: 1})
    ab = u.algebra.multiply(lie_element(u, {0: 1}), lie_element(u, {1: 1}))
    ba = u.algebra.multiply(lie_element(u, {1: 1}), lie_element(u, {0: 1}))
    assert sub(f3, ab, ba) == c
