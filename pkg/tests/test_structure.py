from math import comb

import networkx as nx
import pytest
from hypothesis import given
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import graphs, to_nx
from kitegraph import (
    Graph,
    GraphError,
    MultiGraph,
    canonical_form,
    check_interlacing,
    clique_number,
    complete,
    cycle,
    disjoint_union,
    induced_subgraph_search,
    is_isomorphic,
    is_smith,
    kite,
    krausz_partitions,
    line_graph,
    path,
    root_graph_search,
    smith_dn,
    smith_e6,
    smith_e7,
    smith_e8,
    star,
    starlike,
    triangle_count,
)
from kitegraph.census import enumerate_graphs
from kitegraph.structure import KrauszPartition, triangle_count_direct


# ------------------------------------------------------------ triangles, cliques


def test_triangle_examples():
    for p in range(3, 12):
        for q in range(6):
            assert triangle_count(kite(p, q)) == comb(p, 3)
    assert triangle_count(cycle(5)) == 0
    assert triangle_count(complete(5)) == 10


def test_triangle_count_trace_equals_direct_on_census():
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert triangle_count(g) == triangle_count_direct(g)


@given(graphs(max_n=10))
def test_triangles_match_networkx(g):
    assert triangle_count(g) == sum(nx.triangles(to_nx(g)).values()) // 3


def test_clique_examples():
    assert clique_number(kite(5, 3)) == 5
    assert clique_number(path(7)) == 2
    assert clique_number(line_graph(star(4))) == 4
    assert clique_number(Graph.empty(0)) == 0
    assert clique_number(Graph.empty(3)) == 1


@given(graphs(min_n=1, max_n=12))
def test_clique_number_matches_networkx(g):
    assert clique_number(g) == max(len(c) for c in nx.find_cliques(to_nx(g)))


# ------------------------------------------------------------ induced subgraphs


def test_induced_search_examples():
    emb = induced_subgraph_search(kite(4, 2), complete(4))
    assert emb is not None and kite(4, 2).induced(emb) == complete(4)
    assert induced_subgraph_search(kite(4, 2), cycle(4)) is None
    assert induced_subgraph_search(star(4), star(4)) == [0, 1, 2, 3, 4]
    assert induced_subgraph_search(path(2), path(3)) is None


@given(graphs(max_n=8), graphs(max_n=4))
def test_induced_search_matches_networkx(g, pattern):
    emb = induced_subgraph_search(g, pattern)
    expected = GraphMatcher(to_nx(g), to_nx(pattern)).subgraph_is_isomorphic()
    assert (emb is not None) == expected
    if emb is not None:
        assert g.induced(emb) == pattern
        # composition: embedded subgraphs interlace
        if pattern.n:
            assert check_interlacing(g, pattern, emb)


# ------------------------------------------------------------ Smith graphs


def test_smith_examples():
    assert is_smith(cycle(7))
    assert is_smith(star(4))
    assert not is_smith(path(9))
    with pytest.raises(GraphError):
        is_smith(Graph.empty(2))


def _smith_by_order(n):
    forms = set()
    if n >= 3:
        forms.add(canonical_form(cycle(n)))
    if n >= 5:
        forms.add(canonical_form(smith_dn(n - 1)))
    extra = {7: smith_e6(), 8: smith_e7(), 9: smith_e8()}
    if n in extra:
        forms.add(canonical_form(extra[n]))
    return forms


@pytest.mark.parametrize("n", range(1, 9))
def test_smith_graphs_in_census_are_the_standard_list(n):
    found = {canonical_form(g) for g in enumerate_graphs(n, connected_only=True) if is_smith(g)}
    assert found == _smith_by_order(n)


# ------------------------------------------------------------ Krausz and roots


@given(graphs(max_n=7))
def test_krausz_partitions_are_valid(g):
    for cells in krausz_partitions(g):
        assert KrauszPartition(g.n, cells).is_valid(g)


def test_krausz_partition_of_triangle():
    parts = {tuple(sorted(p)) for p in krausz_partitions(complete(3))}
    # one 3-clique, or three edges
    assert ((0, 1, 2),) in parts
    assert ((0, 1), (0, 2), (1, 2)) in parts


def _kinds(roots):
    return sorted(r.kind for r in roots)


def test_root_search_examples():
    k3 = root_graph_search(complete(3))
    assert len(k3) == 2
    assert _kinds(k3) == ["odd_unicyclic", "tree"]
    shapes = {canonical_form(r.graph.to_graph()) for r in k3}
    assert shapes == {canonical_form(complete(3)), canonical_form(star(3))}

    p3 = root_graph_search(path(3))
    assert any(r.is_simple and is_isomorphic(r.graph.to_graph(), path(4)) for r in p3)
    assert any(r.kind == "b_graph(tree, petals=1)" and r.graph.n == 3 for r in p3)

    roots = root_graph_search(kite(5, 2))
    assert any(r.is_simple and is_isomorphic(r.graph.to_graph(), starlike(1, 1, 1, 1, 3)) for r in roots)


def test_root_search_multigraph_root_of_two_isolated_vertices():
    roots = root_graph_search(Graph.empty(2))
    assert len(roots) == 2  # 2K2 and a lone double edge
    assert any(r.graph == MultiGraph.from_edges(2, [(0, 1), (0, 1)]) for r in roots)


def test_claw_roots_are_b_graphs_only():
    roots = root_graph_search(star(3))
    assert roots and not any(r.is_simple for r in roots)
    # five independent neighbours cannot be covered by two cliques or petal pairs
    assert root_graph_search(star(5)) == []
    with pytest.raises(GraphError):
        root_graph_search(path(13))


@given(graphs(min_n=2, max_n=7, connected=True))
def test_whitney_unique_roots(h):
    # a connected graph other than K3 / K_{1,3} is determined by its line graph
    lg = line_graph(h)
    if lg.n > 12:
        return
    simple = [r for r in root_graph_search(lg) if r.is_simple]
    if is_isomorphic(h, complete(3)) or is_isomorphic(h, star(3)):
        assert len(simple) == 2
    else:
        assert len(simple) == 1
        assert is_isomorphic(simple[0].graph.to_graph(), h)


@given(graphs(max_n=8))
def test_every_root_reproduces_the_graph(g):
    for r in root_graph_search(g):
        assert is_isomorphic(line_graph(r.graph), g)


def test_disconnected_root_kind():
    g = disjoint_union(complete(3), path(2))
    # (K3 or K_{1,3}) plus P3; no twins, so no petal roots
    assert _kinds(root_graph_search(g)) == ["disconnected", "disconnected"]
