import random

import pytest

from plgroups import make_standard_chain, make_standard_ring5


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def ring():
    return make_standard_ring5()


@pytest.fixture(scope="session")
def chain4():
    return make_standard_chain(4)
