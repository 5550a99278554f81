import random

import pytest

from luckylab.graph import build_graph


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_graph(rng, n_min=1, n_max=6, p=0.5):
    n = rng.randint(n_min, n_max)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)
