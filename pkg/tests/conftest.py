from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sumperfect.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    path_graph,
)


@pytest.fixture(scope="session")
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture(scope="session")
def k33() -> Graph:
    return complete_bipartite(3, 3)


@pytest.fixture(scope="session")
def two_k2() -> Graph:
    return from_edge_list(4, [(0, 1), (2, 3)])


@pytest.fixture(scope="session")
def three_k2() -> Graph:
    return from_edge_list(6, [(0, 1), (2, 3), (4, 5)])


@pytest.fixture(scope="session")
def two_k3() -> Graph:
    return disjoint_union(complete_graph(3), complete_graph(3))


@pytest.fixture(scope="session")
def h26() -> Graph:
    return from_edge_list(
        7,
        [(0, 3), (0, 5), (0, 6), (1, 4), (1, 5), (2, 4), (2, 6), (4, 5), (4, 6), (5, 6)],
    )


@pytest.fixture(scope="session")
def small_corpus() -> dict[int, list[Graph]]:
    """All non-isomorphic graphs for n <= 7, keyed by order."""
    from sumperfect.enumeration import graphs_of_order

    return {n: graphs_of_order(n) for n in range(0, 8)}
