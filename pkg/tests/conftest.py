import pytest

from rainbowpath import (
    ColoredGraph,
    Coloring,
    build_graph,
    chromatic_number,
    cycle_graph,
    dsatur_coloring,
    mycielski_iterates,
    petersen_graph,
)


@pytest.fixture(scope="session")
def c5():
    return cycle_graph(5)


@pytest.fixture(scope="session")
def c5_colored(c5):
    return ColoredGraph(c5, Coloring((1, 2, 1, 2, 3)))


@pytest.fixture(scope="session")
def petersen():
    return petersen_graph()


@pytest.fixture(scope="session")
def grotzsch():
    # second Mycielski iterate of K2: 11 vertices, chromatic number 4
    return mycielski_iterates(2)[-1]


@pytest.fixture(scope="session")
def k2():
    return build_graph(2, [(0, 1)])


def optimally_colored(g) -> ColoredGraph:
    return ColoredGraph(g, chromatic_number(g).witness)


def greedy_colored(g) -> ColoredGraph:
    return ColoredGraph(g, dsatur_coloring(g))
