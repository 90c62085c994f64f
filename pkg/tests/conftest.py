# tests/conftest.py
from fractions import Fraction

import numpy as np
import pytest

from fcgp.config import reset_settings
from fcgp.core import (Graph, Instance)
from fcgp.generators import gen_random_gnm


ALPHAS = tuple(Fraction(a) for a in ("0", "1/4", "1/3", "1/2", "3/4", "1"))


@pytest.fixture(autouse=True)
def default_settings():
    reset_settings()
    yield
    reset_settings()


def random_instance(rng: np.random.Generator, max_n: int = 14, max_k: int = 4, alphas=ALPHAS, direction=None):
    n = int(rng.integers(1, max_n + 1))
    k = int(rng.integers(1, min(max_k, n) + 1))
    m = int(rng.integers(0, n * (n - 1) // 2 + 1))
    graph = gen_random_gnm(n, m, int(rng.integers(2 ** 31)))
    alpha = alphas[int(rng.integers(len(alphas)))]
    if direction is None:
        direction = "max" if rng.integers(2) == 0 else "min"
    return Instance(graph, k, alpha, direction)


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])
