"""Simple graphs and multigraphs on vertices ``0..n-1``.

A :class:`Graph` stores one adjacency bitmask per vertex, which keeps the
hot loops of the census (refinement, clique search, triangle counts) on
integer operations.  Both types are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for invalid graph input (bad vertex, malformed edge, ...)."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``masks[v]`` has bit ``u`` set iff ``u`` and ``v`` are adjacent.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.masks)}")
        for v, mask in enumerate(self.masks):
            if mask >> self.n or mask < 0:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(mask):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # construction -----------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, masks: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee symmetric loop-free masks
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "masks", masks)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]] | np.ndarray) -> Graph:
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        n = a.shape[0]
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if a[u, v]]
        g = cls.from_edges(n, edges)
        if not np.array_equal((a != 0).astype(int), g.adjacency_matrix()):
            raise GraphError("adjacency matrix must be symmetric with zero diagonal")
        return g

    # queries ----------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.masks) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.masks]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.masks[u] >> u + 1 << u + 1)]

    def pendant_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.masks[v].bit_count() == 1]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.masks[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        # the null graph counts as connected (vacuously one component)
        return self.n <= 1 or len(self.components()) == 1

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for u in _bits(self.masks[v]):
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return False
        return True

    # derived graphs ---------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices) or any(not 0 <= v < self.n for v in vertices):
            raise GraphError("induced() needs distinct in-range vertices")
        return Graph.from_edges(
            len(vertices),
            [(index[u], index[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)],
        )

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(self.masks)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class MultiGraph:
    """Undirected loopless graph with edge multiplicities.

    ``mult`` maps ``(u, v)`` with ``u < v`` to a positive multiplicity;
    pairs that are absent have multiplicity zero.
    """

    n: int
    mult: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self) -> None:
        prev = None
        for (u, v), k in self.mult:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad multigraph edge ({u}, {v}) for n={self.n}")
            if k <= 0:
                raise GraphError(f"multiplicity of ({u}, {v}) must be positive")
            if prev is not None and (u, v) <= prev:
                raise GraphError("multigraph edges must be sorted and distinct")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> MultiGraph:
        """Build from a list of edge instances; repeated pairs add up."""
        counts: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + 1
        return cls(n, tuple(sorted(counts.items())))

    @classmethod
    def from_graph(cls, g: Graph) -> MultiGraph:
        return cls(g.n, tuple((e, 1) for e in g.edges()))

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return dict(self.mult).get((u, v), 0)

    @property
    def m(self) -> int:
        """Edge count with multiplicity."""
        return sum(k for _, k in self.mult)

    def edge_instances(self) -> list[tuple[int, int, int]]:
        """``(u, v, i)`` for each parallel copy ``i``, in lexicographic order."""
        return [(u, v, i) for (u, v), k in self.mult for i in range(k)]

    def degree(self, v: int) -> int:
        return sum(k for (a, b), k in self.mult if v in (a, b))

    def is_simple(self) -> bool:
        return all(k == 1 for _, k in self.mult)

    def to_graph(self) -> Graph:
        if not self.is_simple():
            raise GraphError("multigraph has parallel edges")
        return Graph.from_edges(self.n, [e for e, _ in self.mult])

    def underlying(self) -> Graph:
        """Simple graph obtained by collapsing parallel edges."""
        return Graph.from_edges(self.n, [e for e, _ in self.mult])

    def petals(self) -> list[tuple[int, int]]:
        """``(host, petal_vertex)`` for every pendant double edge."""
        out = []
        for (u, v), k in self.mult:
            if k != 2:
                continue
            if self.degree(v) == 2:
                out.append((u, v))
            elif self.degree(u) == 2:
                out.append((v, u))
        return out

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, mult={dict(self.mult)})"


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` on ``0..n1-1`` followed by ``g2`` shifted up by ``n1``."""
    shift = g1.n
    return Graph._trusted(g1.n + g2.n, g1.masks + tuple(mask << shift for mask in g2.masks))
