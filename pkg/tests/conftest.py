import random

import pytest

from sbcert.algebra import CyclicAlgebra
from sbcert.cyclotomic import make_field


@pytest.fixture(scope="session")
def field7():
    return make_field(7)


@pytest.fixture(scope="session")
def field13():
    return make_field(13)


@pytest.fixture(scope="session")
def alg7(field7):
    return CyclicAlgebra(field7, 2)


@pytest.fixture
def rng():
    return random.Random(0)
