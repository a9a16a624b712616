import pytest

from raag import Graph, Group, cycle_graph, path_graph


def centralizer_graph():
    """The 4-cycle a-b-c-d with two extra vertices e, f joined to all four."""
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    edges += [(x, y) for x in "ef" for y in "abcd"]
    return Graph("abcdef", edges)


@pytest.fixture
def c5():
    return cycle_graph(5, "abcde")


@pytest.fixture
def c4():
    return cycle_graph(4, "abcd")


@pytest.fixture
def p3():
    """The path a-b-c-d (three edges)."""
    return path_graph(4, "abcd")


@pytest.fixture
def G5(c5):
    return Group(c5)


@pytest.fixture
def cgraph():
    return centralizer_graph()
