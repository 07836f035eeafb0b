import pytest

from hopfext.core.enums import CheckMode, ExtensionLevel
from hopfext.core.errors import PreconditionError
from hopfext.services.extensions.bicrossed import (
    bicrossed_product, compare_factorization, extract_datum, trivial_datum,
)
from hopfext.services.extensions.restricted import sch_images, split_extension
from hopfext.services.extensions.sequence import (
    ExtensionCandidate, abelian_flags, check_exact, is_normal_subalgebra, verify_extension,
)
from hopfext.services.hopf.groups import AbelianGroup, group_algebra
from hopfext.services.hopf.maps import GeneratorMap
from hopfext.services.lie.ghost import build_l_from_data
from hopfext.services.nichols.data import laestrygonian


@pytest.fixture(scope="module")
def jordan_split(jordan_data):
    return split_extension(jordan_data, 3)


def test_jordan_split_dimensions(jordan_split):
    ext, _ = jordan_split
    assert ext.dimensions == {"K": 9, "H": 27, "L": 3}


def test_jordan_split_chain(jordan_split):
    ext, pair = jordan_split
    reports = verify_extension(ext, pair, ExtensionLevel.SPLIT, CheckMode.EXHAUSTIVE, seed=1)
    assert [r.level for r in reports] == [ExtensionLevel.EXACT, ExtensionLevel.CLEFT, ExtensionLevel.SPLIT]
    for report in reports:
        assert report.passed, report.failures()
    assert reports[0].abelian


def test_jordan_kernel_is_normal(jordan_split):
    ext, _ = jordan_split
    assert is_normal_subalgebra(ext, CheckMode.EXHAUSTIVE) == (True, None)
    assert abelian_flags(ext) == (True, True)


def test_exact_level_stops_early(jordan_split):
    ext, pair = jordan_split
    reports = verify_extension(ext, pair, ExtensionLevel.EXACT, CheckMode.EXHAUSTIVE)
    assert len(reports) == 1


def test_split_datum_has_trivial_cocycles(jordan_split):
    ext, pair = jordan_split
    datum, report = extract_datum(ext, pair, split=True)
    assert report.sigma_trivial
    assert report.tau_trivial
    assert report.passed
    assert set(datum.coaction) == set(ext.L.basis)


def test_jordan_datum_round_trip(jordan_split):
    ext, pair = jordan_split
    datum, _ = extract_datum(ext, pair, split=True)
    product, _, _ = bicrossed_product(datum, name="K#L")
    assert product.dim == ext.H.dim == 27
    report = compare_factorization(ext, pair, product)
    assert report.passed, report.failures()
    assert {c.name for c in report.checks} == {"bijective", "algebra_map", "coalgebra_map"}


def test_broken_projection_fails_exactness(jordan_split):
    ext, _ = jordan_split
    images = dict(ext.pi.images)
    g = ext.H.algebra.ngens - 1
    images[g] = {}
    broken = ExtensionCandidate(ext.K, ext.H, ext.L, ext.iota, GeneratorMap(ext.H, ext.L, images, name="pi"))
    report = check_exact(broken, CheckMode.EXHAUSTIVE)
    assert not report.passed
    assert not report.check("pi_hopf").passed


def test_split_needs_trivial_q(f3):
    with pytest.raises(PreconditionError):
        split_extension(laestrygonian(f3, ghost=1, q=2), 6)


def test_trivial_bicrossed_product_is_tensor_product(f3):
    K = group_algebra(f3, AbelianGroup((3,)), name="kZ3")
    L = group_algebra(f3, AbelianGroup((2,)), name="kZ2")
    product, ext, pair = bicrossed_product(trivial_datum(K, L), name="kZ3#kZ2")
    assert product.dim == 6
    assert product.is_cocommutative()
    reports = verify_extension(ext, pair, ExtensionLevel.SPLIT, CheckMode.EXHAUSTIVE)
    assert all(r.passed for r in reports)
    assert len(reports) == 3
    assert compare_factorization(ext, pair, product).passed


@pytest.mark.slow
def test_laestrygonian_split_extension(laestry_data):
    ext, pair = split_extension(laestry_data, 3)
    assert ext.dimensions == {"K": 27, "H": 729, "L": 27}
    reports = verify_extension(ext, pair, ExtensionLevel.SPLIT, CheckMode.GENERATORS, seed=7)
    assert all(r.passed for r in reports), [r.failures() for r in reports]
    images = sch_images(ext, laestry_data, build_l_from_data(laestry_data))
    assert images
    assert all(ok for _, ok in images)
