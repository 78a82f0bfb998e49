import pytest
from hypothesis import settings

from dimonoids import classify, enumerate_semigroups

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def semigroups():
    """All labeled associative tables, by order."""
    return {n: list(enumerate_semigroups(n)) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def catalogs():
    """Isomorphism-class catalogs, by order."""
    return {n: classify(n) for n in (1, 2, 3)}
