import pytest

from finform import catalog_generate


@pytest.fixture(scope="session")
def catalog24():
    return catalog_generate(24)


@pytest.fixture(scope="session")
def catalog48():
    return catalog_generate(48)


@pytest.fixture(scope="session")
def catalog12():
    return catalog_generate(12)
