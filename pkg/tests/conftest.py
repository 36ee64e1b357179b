import random

import pytest

from singcensus.algebra.field import PrimeField
from singcensus.algebra.poly import GradedSpace


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture
def rng():
    return random.Random(12345)


def random_homogeneous(field, nvars, degree, rng):
    """A random nonzero homogeneous polynomial for property tests."""
    space = GradedSpace(field, nvars, degree, GradedSpace.HOMOGENEOUS)
    return space.sample_nonzero(rng)


def random_at_most(field, nvars, degree, rng):
    space = GradedSpace(field, nvars, degree, GradedSpace.AT_MOST)
    return space.sample(rng)
