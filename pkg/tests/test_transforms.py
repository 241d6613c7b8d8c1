from math import comb

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from kitegraph import (
    Graph,
    GraphError,
    MultiGraph,
    b_graph,
    complete,
    cycle,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    generalized_line_graph,
    is_isomorphic,
    kite,
    line_graph,
    path,
    star,
    starlike,
    subdivision,
)


def test_line_graph_examples():
    assert is_isomorphic(line_graph(path(4)), path(3))
    assert is_isomorphic(line_graph(star(3)), complete(3))
    for q in range(0, 6):
        assert is_isomorphic(line_graph(starlike(1, 1, 1, q + 1)), kite(4, q))


@pytest.mark.parametrize("p,q", [(5, 0), (5, 3), (7, 2), (11, 4)])
def test_kite_is_line_graph_of_starlike(p, q):
    t = starlike(*([1] * (p - 1) + [q + 1]))
    assert is_isomorphic(line_graph(t), kite(p, q))


@given(graphs(max_n=8))
def test_line_graph_matches_networkx(g):
    lg = line_graph(g)
    assert lg.n == g.m
    assert lg.m == sum(comb(d, 2) for d in g.degrees())
    assert nx.is_isomorphic(to_nx(lg), nx.line_graph(to_nx(g)))


def test_line_graph_vertex_order_follows_edges():
    g = kite(4, 1)
    lg = line_graph(g)
    edges = g.edges()
    for i, j in lg.edges():
        assert len(set(edges[i]) & set(edges[j])) == 1


def test_subdivision_examples():
    assert is_isomorphic(subdivision(path(2)), path(3))
    assert is_isomorphic(subdivision(cycle(3)), cycle(6))
    assert is_isomorphic(subdivision(star(3)), starlike(2, 2, 2))


@given(graphs(max_n=8))
def test_subdivision_shape(g):
    s = subdivision(g)
    assert (s.n, s.m) == (g.n + g.m, 2 * g.m)
    assert s.is_bipartite()
    for i, (u, v) in enumerate(g.edges()):
        assert s.neighbors(g.n + i) == [u, v]


def test_generalized_line_graph_examples():
    assert is_isomorphic(generalized_line_graph(path(2), (1, 0)), path(3))
    assert generalized_line_graph(complete(1), (1,)) == Graph.empty(2)
    h = kite(4, 2)
    assert generalized_line_graph(h, (0,) * h.n) == line_graph(h)


def test_petal_edges_are_not_adjacent():
    h = b_graph(path(3), (0, 2, 0))
    lg = line_graph(h)
    inst = h.edge_instances()
    for i, (a, b, _) in enumerate(inst):
        for j, (c, d, _) in enumerate(inst):
            if i < j and {a, b} == {c, d}:
                assert not lg.has_edge(i, j)
    # two petals at the middle vertex: 2 path edges + 4 petal edges
    assert lg.n == 6


def test_multigraph_line_graph_uses_exactly_one_shared_end():
    h = MultiGraph.from_edges(2, [(0, 1), (0, 1), (0, 1)])
    assert line_graph(h) == Graph.empty(3)


def test_delete_vertex_examples():
    assert is_isomorphic(delete_vertex(complete(3), 0), path(2))
    three_p2 = disjoint_union(disjoint_union(path(2), path(2)), path(2))
    assert is_isomorphic(delete_vertex(starlike(2, 2, 2), 0), three_p2)
    k = kite(4, 1)
    assert delete_vertex(k, 4) == complete(4)
    assert delete_vertices(k, [4, 3]) == complete(3)
    with pytest.raises(GraphError):
        delete_vertex(k, 5)
    with pytest.raises(GraphError):
        delete_vertices(k, [7])
