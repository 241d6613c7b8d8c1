"""Line graphs, subdivisions, generalized line graphs, vertex deletion."""

from __future__ import annotations

from typing import Sequence

from .families import b_graph
from .graph import Graph, GraphError, MultiGraph


def line_graph(g: Graph | MultiGraph) -> Graph:
    """Line graph; vertex ``i`` is the ``i``-th edge instance of ``g``.

    Edge instances are ordered by ``(min end, max end, copy index)``.  Two
    instances are adjacent iff they share exactly one endpoint, so the
    two edges of a petal are not adjacent.
    """
    if isinstance(g, Graph):
        g = MultiGraph.from_graph(g)
    inst = g.edge_instances()
    edges = []
    for i, (a, b, _) in enumerate(inst):
        for j in range(i + 1, len(inst)):
            c, d, _ = inst[j]
            if len({a, b} & {c, d}) == 1:
                edges.append((i, j))
    return Graph.from_edges(len(inst), edges)


def subdivision(g: Graph) -> Graph:
    """Insert a new vertex into every edge; edge ``i`` gets vertex ``n + i``."""
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        x = g.n + i
        edges += [(u, x), (x, v)]
    return Graph.from_edges(g.n + g.m, edges)


def generalized_line_graph(h: Graph, petals: Sequence[int]) -> Graph:
    """``GL(h; a_1..a_n)``, the line graph of the B-graph ``b_graph(h, petals)``."""
    return line_graph(b_graph(h, petals))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return g.induced([u for u in range(g.n) if u != v])


def delete_vertices(g: Graph, vs: Sequence[int]) -> Graph:
    drop = set(vs)
    bad = [v for v in drop if not 0 <= v < g.n]
    if bad:
        raise GraphError(f"vertices {bad} out of range for n={g.n}")
    return g.induced([u for u in range(g.n) if u not in drop])
