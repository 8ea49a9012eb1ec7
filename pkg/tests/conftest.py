import pytest

from qaffine import freealg, ualg
from qaffine.scalars import default_context


@pytest.fixture(scope="session")
def alg():
    return freealg.default_algebra()


@pytest.fixture(scope="session")
def U(alg):
    return ualg.UAlgebra(alg)


@pytest.fixture(scope="session")
def ctx1():
    return default_context(1)


@pytest.fixture(scope="session")
def ctx2():
    return default_context(2)
