import numpy as np
import pytest

from rankgeo.field import make_field


@pytest.fixture(scope="session")
def F8():
    return make_field(2, 1, 3)


@pytest.fixture(scope="session")
def F16():
    return make_field(2, 1, 4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
