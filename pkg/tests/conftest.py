import random

import pytest

from mct import fixtures


def random_ideals(seed: int, count: int, max_vars: int = 5, max_gens: int = 6):
    rng = random.Random(seed)
    return [fixtures.random_squarefree_ideal(rng, max_vars, max_gens) for _ in range(count)]


@pytest.fixture(scope="session")
def reisner():
    return fixtures.reisner()


@pytest.fixture(scope="session")
def bipartite6():
    return fixtures.bipartite6()


@pytest.fixture(scope="session")
def z1():
    return fixtures.z1()


@pytest.fixture(scope="session")
def triangle():
    return fixtures.triangle()
