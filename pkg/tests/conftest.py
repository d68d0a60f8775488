import pytest

from freealg import complex_algebra, octonion_algebra, quaternion_algebra


@pytest.fixture(scope="session")
def C():
    return complex_algebra()


@pytest.fixture(scope="session")
def H():
    return quaternion_algebra()


@pytest.fixture(scope="session")
def O():
    return octonion_algebra()
