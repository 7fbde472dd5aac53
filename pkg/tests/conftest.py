import numpy as np
import pytest

import sidonkit
from sidonkit.gf2core import default_modulus


@pytest.fixture(scope="session")
def set192():
    return sidonkit.sidon_15_192()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def field():
    return default_modulus
