"""Combinatorial invariants and recognition: triangles, cliques, induced
subgraphs, Smith graphs and line-graph roots."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import multigraph_canonical_form
from .exact import certify_rho_le, trace_powers
from .graph import Graph, GraphError, MultiGraph, _bits
from .transforms import line_graph

CLIQUE_MAX_N = 64
SUBGRAPH_MAX_N = 64
ROOT_SEARCH_MAX_N = 12


def triangle_count(g: Graph) -> int:
    """``t(G) = tr(A^3) / 6``."""
    if g.n == 0:
        return 0
    return trace_powers(g, 3)[2] // 6


def triangle_count_direct(g: Graph) -> int:
    """Triangles by walking every edge ``u < v`` and counting common neighbours ``w > v``."""
    count = 0
    for u, v in g.edges():
        count += (g.masks[u] & g.masks[v] & ~((1 << v + 1) - 1)).bit_count()
    return count


def clique_number(g: Graph) -> int:
    """Maximum clique size by branch and bound with a greedy-colouring bound."""
    if g.n > CLIQUE_MAX_N:
        raise GraphError(f"clique search is capped at n={CLIQUE_MAX_N}, got {g.n}")
    if g.n == 0:
        return 0
    masks = g.masks
    best = 1

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) in colour order
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~masks[v] & ~low
                rest &= ~low
                order.append((v, colour))
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order = colour_bound(cand)
        for v, colour in reversed(order):
            if size + colour <= best:
                return
            new = cand & masks[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def induced_subgraph_search(g: Graph, pattern: Graph) -> list[int] | None:
    """First induced embedding of ``pattern`` in ``g``, or ``None``.

    Returns ``emb`` with ``emb[j]`` the host vertex for pattern vertex ``j``.
    Pattern vertices are matched in index order and host candidates are
    tried in increasing order, so the result is the lexicographically
    first embedding.
    """
    k, n = pattern.n, g.n
    if k > n:
        return None
    if n > SUBGRAPH_MAX_N:
        raise GraphError(f"subgraph search is capped at n={SUBGRAPH_MAX_N}, got {n}")
    pdeg = pattern.degrees()
    gdeg = g.degrees()
    emb: list[int] = []
    used = 0

    def extend(j: int) -> bool:
        nonlocal used
        if j == k:
            return True
        need_adj = pattern.masks[j] & ((1 << j) - 1)
        for x in range(n):
            if used >> x & 1 or gdeg[x] < pdeg[j]:
                continue
            gx = g.masks[x]
            ok = True
            for i in range(j):
                if bool(need_adj >> i & 1) != bool(gx >> emb[i] & 1):
                    ok = False
                    break
            if not ok:
                continue
            emb.append(x)
            used |= 1 << x
            if extend(j + 1):
                return True
            emb.pop()
            used &= ~(1 << x)
        return False

    return list(emb) if extend(0) else None


def is_smith(g: Graph) -> bool:
    """Connected graph with largest adjacency eigenvalue exactly 2, decided exactly."""
    if not g.is_connected() or g.n == 0:
        raise GraphError("is_smith needs a connected graph")
    return certify_rho_le(g, 2).proved and not certify_rho_le(g, 2, strict=True).proved


# ------------------------------------------------------------ root graphs


@dataclass(frozen=True)
class KrauszPartition:
    """Edge partition of a graph into cliques, each vertex in at most two cells."""

    n: int
    cells: tuple[tuple[int, ...], ...]

    def is_valid(self, g: Graph) -> bool:
        seen = set()
        member = [0] * g.n
        for cell in self.cells:
            for v in cell:
                member[v] += 1
            for u, v in combinations(cell, 2):
                if not g.has_edge(u, v) or (u, v) in seen:
                    return False
                seen.add((u, v))
        return len(seen) == g.m and max(member, default=0) <= 2


def krausz_partitions(g: Graph):
    """Yield every Krausz partition of ``g`` (cells of size >= 2)."""
    n = g.n
    masks = g.masks
    member = [0] * n
    uncovered = [m for m in masks]
    cells: list[tuple[int, ...]] = []

    def cliques_through(u: int, v: int) -> list[int]:
        # all vertex sets C containing u, v whose pairs are all uncovered edges
        out = []
        common = uncovered[u] & uncovered[v]

        def grow(cur: int, cand: int) -> None:
            out.append(cur)
            while cand:
                low = cand & -cand
                w = low.bit_length() - 1
                cand ^= low
                if member[w] < 2:
                    grow(cur | low, cand & uncovered[w])

        grow((1 << u) | (1 << v), common)
        return out

    def rec():
        u = next((x for x in range(n) if uncovered[x]), None)
        if u is None:
            yield tuple(cells)
            return
        if member[u] >= 2:
            return
        v = (uncovered[u] & -uncovered[u]).bit_length() - 1
        if member[v] >= 2:
            return
        for cmask in cliques_through(u, v):
            cell = tuple(_bits(cmask))
            for x in cell:
                member[x] += 1
                uncovered[x] &= ~cmask
            cells.append(cell)
            yield from rec()
            cells.pop()
            for x in cell:
                member[x] -= 1
                uncovered[x] |= cmask & ~(1 << x)

    yield from rec()


def _root_from_cells(n: int, cells: tuple[tuple[int, ...], ...]) -> tuple[int, list[tuple[int, int]]]:
    """Root vertices and the root edge for each line-graph vertex."""
    ends: list[list[int]] = [[] for _ in range(n)]
    for c, cell in enumerate(cells):
        for v in cell:
            ends[v].append(c)
    nxt = len(cells)
    edges = []
    for v in range(n):
        while len(ends[v]) < 2:
            ends[v].append(nxt)
            nxt += 1
        edges.append((ends[v][0], ends[v][1]))
    return nxt, edges


@dataclass(frozen=True)
class Root:
    """A (multi)graph ``h`` with ``line_graph(h)`` isomorphic to the input."""

    graph: MultiGraph
    kind: str  # tree, odd_unicyclic, even_unicyclic, other, disconnected, or b_graph(...)
    petals: tuple[tuple[int, int], ...]

    @property
    def is_simple(self) -> bool:
        return not self.petals


def classify_root(h: MultiGraph) -> str:
    petals = h.petals()
    if petals:
        # B-graph: classify the host after removing petal vertices
        keep = sorted(set(range(h.n)) - {p for _, p in petals})
        host = h.underlying().induced(keep)
        inner = _classify_simple(host, drop_isolated=False)
        return f"b_graph({inner}, petals={len(petals)})"
    if not h.is_simple():
        return "multigraph"
    return _classify_simple(h.to_graph())


def _classify_simple(h: Graph, drop_isolated: bool = True) -> str:
    # isolated vertices do not change the line graph, so plain roots ignore them
    core = h.induced([v for v in range(h.n) if h.degree(v)]) if drop_isolated else h
    if core.n == 0:
        return "empty"
    if not core.is_connected():
        return "disconnected"
    if core.m == core.n - 1:
        return "tree"
    if core.m == core.n:
        return "odd_unicyclic" if not core.is_bipartite() else "even_unicyclic"
    return "other"


def _twin_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(e, f) for e, f in combinations(range(g.n), 2) if not g.has_edge(e, f) and g.masks[e] == g.masks[f]]


def _matchings(pairs: list[tuple[int, int]]):
    def rec(i: int, used: int, chosen: list):
        if i == len(pairs):
            yield list(chosen)
            return
        yield from rec(i + 1, used, chosen)
        e, f = pairs[i]
        if not (used >> e & 1 or used >> f & 1):
            chosen.append((e, f))
            yield from rec(i + 1, used | 1 << e | 1 << f, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def root_graph_search(g: Graph) -> list[Root]:
    """All simple and B-graph roots ``h`` with ``line_graph(h)`` isomorphic to ``g``.

    A B-graph root arises from a set of petal pairs: non-adjacent twins
    ``e, f`` of ``g``.  Dropping ``f`` leaves a graph whose simple roots
    must carry ``e`` as a pendant edge; doubling ``e`` restores the petal.
    Roots have no isolated vertices and are deduplicated up to
    isomorphism.
    """
    if g.n > ROOT_SEARCH_MAX_N:
        raise GraphError(f"root graph search is capped at n={ROOT_SEARCH_MAX_N}, got {g.n}")
    from .canon import canonical_form

    target = canonical_form(g)
    found: dict[bytes, Root] = {}
    for petal_pairs in _matchings(_twin_pairs(g)):
        dropped = {f for _, f in petal_pairs}
        keep = [v for v in range(g.n) if v not in dropped]
        index = {v: i for i, v in enumerate(keep)}
        gp = g.induced(keep)
        for cells in krausz_partitions(gp):
            counts = [0] * gp.n
            for cell in cells:
                for v in cell:
                    counts[v] += 1
            if any(counts[index[e]] > 1 for e, _ in petal_pairs):
                continue
            size, edges = _root_from_cells(gp.n, cells)
            inst = list(edges)
            for e, _ in petal_pairs:
                inst.append(edges[index[e]])
            h = MultiGraph.from_edges(size, inst)
            if any(k > 2 for _, k in h.mult):
                continue
            if petal_pairs and len(h.petals()) < len(petal_pairs):
                continue
            if canonical_form(line_graph(h)) != target:
                continue
            key = multigraph_canonical_form(h)
            if key not in found:
                found[key] = Root(h, classify_root(h), tuple(h.petals()))
    return [found[k] for k in sorted(found)]
