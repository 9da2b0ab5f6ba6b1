import pytest

from tilting.core.cellular import cellular_basis
from tilting.core.modules import tensor_power
from tilting.core.scalars import ScalarContext


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exact computations on V^5, V^6 and larger modules")


@pytest.fixture(scope="session")
def generic():
    return ScalarContext.generic()


@pytest.fixture(scope="session")
def l3():
    return ScalarContext.cyclotomic(3)


@pytest.fixture(scope="session")
def l5():
    return ScalarContext.cyclotomic(5)


@pytest.fixture(scope="module")
def v3_l3(l3):
    return cellular_basis(tensor_power(3, l3), graded=True)


@pytest.fixture(scope="module")
def v3_generic(generic):
    return cellular_basis(tensor_power(3, generic))
