import numpy as np
import pytest

from spin4.repro import build_s2xs2


@pytest.fixture(scope="session")
def s2xs2():
    return build_s2xs2()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
