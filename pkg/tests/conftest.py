import random

import pytest

PRIMES = (3, 5, 7)


@pytest.fixture
def rng():
    return random.Random(0x1A5A)
