import os

import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from kitegraph import Graph
from kitegraph.census import CACHE_ENV

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def census_cache(tmp_path_factory):
    # one on-disk census per test session; every census call shares it
    path = tmp_path_factory.mktemp("census-cache")
    old = os.environ.get(CACHE_ENV)
    os.environ[CACHE_ENV] = str(path)
    yield path
    if old is None:
        os.environ.pop(CACHE_ENV, None)
    else:
        os.environ[CACHE_ENV] = old


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, b in zip(pairs, bits) if b]
    if connected:
        # thread a random spanning path so the result is connected
        order = draw(st.permutations(range(n)))
        edges += [(min(a, b), max(a, b)) for a, b in zip(order, order[1:])]
    return Graph.from_edges(n, sorted(set(edges)))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
