import numpy as np
import pytest

from centbench import build_graph


def path_graph(n):
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def cycle_graph(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def star_graph(leaves):
    return build_graph([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def complete_graph(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def random_graph(n, p, rng):
    """Plain Bernoulli sampler, independent of the package generators."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return build_graph(edges, n)


def random_connected_graph(n, p, rng, max_tries=200):
    from centbench import is_connected
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if is_connected(g) and g.m >= 1:
            return g
    raise RuntimeError("could not sample a connected graph")


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240808)
