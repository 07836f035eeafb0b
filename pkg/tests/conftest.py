"""Shared builders; the expensive objects are built once per session."""
import pytest

from hopfext.core.field import field_make
from hopfext.services.nichols.bosonization import bosonize
from hopfext.services.nichols.braided import realize
from hopfext.services.nichols.data import braiding_data, laestrygonian
from hopfext.services.nichols.presentation import nichols_algebra


@pytest.fixture(scope="session")
def f3():
    return field_make(3)


@pytest.fixture(scope="session")
def f5():
    return field_make(5)


@pytest.fixture(scope="session")
def f9():
    return field_make(3, 2)


@pytest.fixture(scope="session")
def jordan_data(f3):
    return braiding_data(f3, 1, 1)


@pytest.fixture(scope="session")
def jordan(jordan_data):
    return nichols_algebra(jordan_data)


@pytest.fixture(scope="session")
def jordan_hopf(jordan, jordan_data):
    return bosonize(jordan, realize(jordan_data, 3))


@pytest.fixture(scope="session")
def jordan_hopf_f6(jordan, jordan_data):
    return bosonize(jordan, realize(jordan_data, 6))


@pytest.fixture(scope="session")
def laestry_data(f3):
    return laestrygonian(f3, ghost=1)


@pytest.fixture(scope="session")
def laestry(laestry_data):
    return nichols_algebra(laestry_data)


@pytest.fixture(scope="session")
def laestry_hopf(laestry, laestry_data):
    return bosonize(laestry, realize(laestry_data, 3))
