# tests/conftest.py
import random

import networkx as nx
import pytest

from isetverify.config import Settings
from isetverify.graphs.graph import Graph, from_edge_list


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edge_list(h.number_of_nodes(), [(index[u], index[v]) for u, v in h.edges()])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def settings() -> Settings:
    """Serial, unbounded, quiet: independent of any isetverify.json lying around."""
    return Settings(jobs=1, max_classes=None, timeout_seconds=None, progress=False, max_enumeration_vertices=9, allow_n10=False)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def bowtie() -> Graph:
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
