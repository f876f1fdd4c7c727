import os

# No log files from test runs; must be set before backend.config is imported
os.environ.setdefault("LOG_FILE", "")

import pytest

from backend.services.generators import complete, union
from backend.services.graph import Graph, build_graph


@pytest.fixture
def k7() -> Graph:
    return complete(7)


@pytest.fixture
def k7_pair() -> Graph:
    """K7 + K7, vertex ids 0..6 and 7..13."""
    return union(complete(7), complete(7))


@pytest.fixture
def k8_pendant() -> Graph:
    """K8 on 0..7 plus vertex 8 hanging off vertex 0."""
    edges = [(u, v) for u in range(8) for v in range(u + 1, 8)] + [(0, 8)]
    return build_graph(9, edges)


@pytest.fixture
def path3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2)])
