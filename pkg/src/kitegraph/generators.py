"""Seeded random test graphs.

Every function takes a ``random.Random`` so callers control repeatability.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphError


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi ``G(n, p)``."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree on ``n`` vertices, decoded from a random Pruefer word."""
    if n < 1:
        raise GraphError("a tree needs n >= 1")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    word = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in word:
        degree[v] += 1
    edges = []
    for v in word:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_odd_unicyclic(n: int, rng: random.Random) -> Graph:
    """Connected graph with one cycle, of odd length, on ``n >= 3`` vertices.

    The cycle length is uniform over the odd values ``3..n``; the other
    vertices hang off uniformly chosen earlier vertices.
    """
    if n < 3:
        raise GraphError("an odd unicyclic graph needs n >= 3")
    c = rng.choice(range(3, n + 1, 2))
    edges = [(i, (i + 1) % c) for i in range(c)]
    for v in range(c, n):
        edges.append((rng.randrange(v), v))
    # shuffle labels so the cycle is not always on the low vertices
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
