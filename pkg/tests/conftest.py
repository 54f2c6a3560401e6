import random

import pytest

from cliquecover import Graph, complete_multipartite_pairs


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def octahedron():
    """K_6 minus the perfect matching of partner pairs."""
    return complete_multipartite_pairs(3)


@pytest.fixture
def k4_minus_edge():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)
