import itertools
import random

import networkx as nx
import pytest

from sparing.utils.graph import Graph


def make_graph(n, edges):
    return Graph.from_edges(n, edges)


def cycle(n):
    return make_graph(n, nx.cycle_graph(n).edges)


def path(n):
    return make_graph(n, nx.path_graph(n).edges)


def complete(n):
    return make_graph(n, nx.complete_graph(n).edges)


def random_graph(rng, n, p=0.5):
    """Random graph on n vertices without isolated vertices (a path backbone is kept)."""
    edges = {(i, i + 1) for i in range(n - 1)}
    for a, b in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((a, b))
    return make_graph(n, sorted(edges))


def oracle_sparing_number(g):
    """|E| minus a max-weight independent set (weight = degree), via networkx cliques of the complement."""
    comp = nx.complement(g.to_networkx())
    for v in comp.nodes:
        comp.nodes[v]["weight"] = g.degree(v)
    _, weight = nx.max_weight_clique(comp, weight="weight")
    return g.edge_count - weight


@pytest.fixture
def rng():
    return random.Random(20240229)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def bowtie():
    return make_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


@pytest.fixture
def k4_minus_edge():
    return make_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
