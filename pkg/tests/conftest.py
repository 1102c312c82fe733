import sys
from pathlib import Path

import networkx as nx
import pytest

from cliquetensor.graph import Graph, random_graph

sys.path.insert(0, str(Path(__file__).parent))


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def two_triangles():
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen():
    return from_nx(nx.petersen_graph())


def corpus(count=40, n_max=10, seed=0):
    """Seeded random graphs plus a few named ones."""
    graphs = [
        random_graph(3 + k % (n_max - 2), (0.3, 0.5, 0.7)[k % 3], seed * 1000 + k)
        for k in range(count)
    ]
    graphs += [petersen(), two_triangles(), cycle(5), path(4), Graph.complete(5)]
    return graphs


@pytest.fixture
def graph_corpus():
    return corpus()


# Filled by test_acceptance.py; echoed after the run so the lines show up
# even when output capture is on.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
