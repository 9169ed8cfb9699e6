import pytest

from remsum import cfrac
from remsum.exactnum import QuadExt


@pytest.fixture(scope="session")
def corpus():
    """Quadratic irrationals in (0, 1) used throughout the tests."""
    return {
        "golden": QuadExt(-1, 1, 5, 2),
        "sqrt2m1": QuadExt(-1, 1, 2, 1),
        "sqrt3m1": QuadExt(-1, 1, 3, 1),
    }


@pytest.fixture(scope="session")
def corpus_cf(corpus):
    return {k: cfrac.expand(t, 64) for k, t in corpus.items()}
