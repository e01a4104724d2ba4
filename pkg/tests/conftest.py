import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from semimono.families import build_betweenness_family, build_closeness_family
from semimono.graph import Graph

settings.register_profile('semimono', deadline=None)
settings.load_profile('semimono')


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


@st.composite
def connected_graphs(draw, min_n: int = 3, max_n: int = 9) -> Graph:
    """A random spanning tree on `n` vertices plus an arbitrary set of extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges += draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
    return Graph.from_edges(n, edges)


@st.composite
def scenarios(draw, min_n: int = 3, max_n: int = 9):
    """A connected graph that is not complete, with one of its non-adjacent pairs."""
    g = draw(connected_graphs(min_n=min_n, max_n=max_n).filter(lambda g: g.edge_count < g.n * (g.n - 1) // 2))
    non_adjacent = [(x, y) for x in range(g.n) for y in range(x + 1, g.n) if not g.has_edge(x, y)]
    x, y = draw(st.sampled_from(non_adjacent))
    return g, x, y


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edge_list('a b\nb c\n')


@pytest.fixture
def cycle4() -> Graph:
    return Graph.from_edge_list('a b\nb c\nc d\nd a\n')


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def star() -> Graph:
    return Graph.from_edge_list('hub l1\nhub l2\nhub l3\nhub l4\n')


@pytest.fixture
def closeness_family():
    return build_closeness_family(10)


@pytest.fixture
def betweenness_family():
    return build_betweenness_family(4)
