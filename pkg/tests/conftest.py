import numpy as np
import pytest

from rigidcheck.certify import VerifyConfig, certify_tuple
from rigidcheck.exact import DegreeTuple, parse_degrees


@pytest.fixture(scope="session")
def flagship():
    return parse_degrees("25^20")


@pytest.fixture(scope="session")
def config():
    return VerifyConfig()


@pytest.fixture(scope="session")
def flagship_certificate(flagship, config):
    return certify_tuple(flagship, config)


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def random_tuples(rng):
    """Factory for random sorted degree tuples with k in [k_lo, k_hi] and degrees in [d_lo, d_hi]."""

    def make(count, k_lo=1, k_hi=30, d_lo=2, d_hi=40):
        tuples = []
        for _ in range(count):
            k = int(rng.integers(k_lo, k_hi + 1))
            degrees = rng.integers(d_lo, d_hi + 1, size=k)
            tuples.append(DegreeTuple.of(int(d) for d in degrees))
        return tuples

    return make
