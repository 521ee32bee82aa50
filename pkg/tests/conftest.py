import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def rand_sym(rng, dim, scale=1.0):
    """Random symmetric matrix with entries of order `scale`."""
    m = rng.normal(size=(dim, dim), scale=scale)
    return 0.5 * (m + m.T)
