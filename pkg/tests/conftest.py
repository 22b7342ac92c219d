import random

import networkx as nx
import pytest

from smhc.graph import Graph
from smhc.generators import random_connected_graph


def atlas_connected(min_n: int = 3, max_n: int = 6):
    """All connected graphs up to isomorphism within the size range."""
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        if not nx.is_connected(G):
            continue
        out.append(Graph(range(n), list(G.edges())))
    return out


def random_corpus(sizes, per_size, seed):
    rng = random.Random(seed)
    out = []
    for n in sizes:
        for _ in range(per_size):
            out.append(random_connected_graph(n, rng))
    return out


@pytest.fixture(scope="session")
def small_atlas():
    return atlas_connected(3, 6)
