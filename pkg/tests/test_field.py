import numpy as np
import pytest

from hopfext.core.errors import FieldError
from hopfext.core.field import field_make, root_of_unity


def test_prime_field_arithmetic(f5):
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.inv(2) == 3
    assert f5.neg(1) == 4
    assert f5.half == 3
    assert f5.element_order(2) == 4


def test_extension_field_uses_integer_encoding(f9):
    assert f9.order == 9
    assert f9.modulus == (1, 0, 1)
    t = 3
    assert f9.mul(t, t) == 2
    assert f9.add(t, 1) == 4
    assert f9.format(4) == "t+1"
    for a in range(1, 9):
        assert f9.mul(a, f9.inv(a)) == 1


def test_root_of_unity_orders(f9):
    zeta = root_of_unity(f9, 4)
    assert f9.element_order(zeta) == 4
    assert f9.pow(zeta, 2) == f9.neg(1)


def test_missing_root_of_unity(f3):
    with pytest.raises(FieldError):
        root_of_unity(f3, 3)


@pytest.mark.parametrize("p, m, modulus", [(2, 1, None), (9, 1, None), (3, 2, [1, 0, 2]), (3, 2, [1, 1])])
def test_field_make_rejects(p, m, modulus):
    with pytest.raises(FieldError):
        field_make(p, m, modulus)


FIELDS_UP_TO_81 = [
    pytest.param(p, m, marks=[pytest.mark.slow] if p ** m > 30 else [])
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79)
    for m in range(1, 5) if p ** m <= 81
]


@pytest.mark.parametrize("p, m", FIELDS_UP_TO_81)
def test_tables_match_galois(p, m):
    field = field_make(p, m)
    gf = field.galois
    elems = gf(np.arange(field.order))
    sums = (elems[:, None] + elems[None, :]).view(np.ndarray)
    products = (elems[:, None] * elems[None, :]).view(np.ndarray)
    for a in field.elements():
        for b in field.elements():
            assert field.add(a, b) == int(sums[a, b])
            assert field.mul(a, b) == int(products[a, b])


@pytest.mark.parametrize("p, m", FIELDS_UP_TO_81)
def test_field_axioms_exhaustive(p, m):
    field = field_make(p, m)
    elems = list(field.elements())
    for a in elems:
        assert field.add(a, 0) == a and field.mul(a, 1) == a
        assert field.add(a, field.neg(a)) == 0
        if a:
            assert field.mul(a, field.inv(a)) == 1
        for b in elems:
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
    triples = [(a, b, c) for a in elems for b in elems for c in elems]
    for a, b, c in triples:
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
