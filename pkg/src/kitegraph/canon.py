"""Canonical labeling by partition refinement and backtracking.

The search tree is the usual individualization-refinement tree: refine
the ordered vertex partition to an equitable one, individualize each
vertex of the first non-singleton cell in turn, and recurse.  Leaves are
discrete partitions, i.e. labelings, and the canonical labeling is the
one whose relabeled adjacency masks are lexicographically largest.

Whenever two leaves give the same relabeled graph their ratio is an
automorphism.  Children of a node that lie in one orbit of the
automorphisms fixing the node's prefix are explored only once.  Every
pruned subtree is then an image of an explored one, so the automorphisms
collected along the way generate the full group; :func:`orbits` relies on
this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, MultiGraph, _bits

CANON_MAX_N = 64


def refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    A cell splits by the vector of neighbour counts into every current
    cell; sub-cells are ordered by that vector, so the result is
    equivariant under relabeling.
    """
    while True:
        cms = []
        for cell in cells:
            cm = 0
            for v in cell:
                cm |= 1 << v
            cms.append(cm)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                mv = masks[v]
                key = tuple([(mv & cm).bit_count() for cm in cms])
                if key in groups:
                    groups[key].append(v)
                else:
                    groups[key] = [v]
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
        if not split:
            return out
        cells = out


def _relabeled(masks: Sequence[int], lab: list[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        m = 0
        for u in _bits(masks[v]):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


@dataclass
class Labeling:
    """Result of a canonical labeling run.

    ``lab[i]`` is the vertex placed at canonical position ``i``;
    ``cert`` is the relabeled mask tuple; ``generators`` generate the
    automorphism group (as vertex maps ``v -> g[v]``).
    """

    lab: list[int]
    cert: tuple[int, ...]
    generators: list[list[int]]
    color_key: tuple[tuple[int, int], ...]


def initial_cells(n: int, colors: Sequence[int] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))] if n else []
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_labeling(
    masks: Sequence[int],
    colors: Sequence[int] | None = None,
    cells: list[list[int]] | None = None,
) -> Labeling:
    """Canonically label a (vertex-coloured) simple graph given by masks.

    ``cells`` may pass an already refined root partition to save work.
    """
    n = len(masks)
    if n > CANON_MAX_N:
        raise GraphError(f"canonical labeling is capped at n={CANON_MAX_N}, got {n}")
    color_key: tuple[tuple[int, int], ...] = ()
    if colors is not None:
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        color_key = tuple(sorted(counts.items()))
    if cells is None:
        cells = refine(masks, initial_cells(n, colors))

    best_cert: tuple[int, ...] | None = None
    best_lab: list[int] = []
    first_cert: tuple[int, ...] | None = None
    first_lab: list[int] = []
    gens: list[list[int]] = []

    def leaf(lab: list[int]) -> None:
        nonlocal best_cert, best_lab, first_cert, first_lab
        cert = _relabeled(masks, lab)
        if best_cert is None:
            best_cert = first_cert = cert
            best_lab = first_lab = lab
            return
        if cert == best_cert or cert == first_cert:
            ref = best_lab if cert == best_cert else first_lab
            g = [0] * n
            for a, b in zip(ref, lab):
                g[a] = b
            gens.append(g)
        elif cert > best_cert:
            best_cert, best_lab = cert, lab

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        for t, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            leaf([c[0] for c in cells])
            return
        explored: list[int] = []
        seen_gens = -1
        roots: list[int] = []
        for v in cell:
            if explored:
                if len(gens) != seen_gens:
                    seen_gens = len(gens)
                    stab = [g for g in gens if all(g[x] == x for x in prefix)]
                    roots = _orbit_roots(n, stab)
                if any(roots[v] == roots[w] for w in explored):
                    continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            child = cells[:t] + [[v], rest] + cells[t + 1:]
            search(refine(masks, child), prefix + [v])

    search(cells, [])
    assert best_cert is not None or n == 0
    return Labeling(best_lab, best_cert or (), gens, color_key)


def orbits(lab: Labeling, n: int) -> list[int]:
    """Orbit representative (smallest vertex) of every vertex."""
    return _orbit_roots(n, lab.generators)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of ``g``."""
    res = canonical_labeling(g.masks)
    return Graph._trusted(g.n, res.cert)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    It is the graph6 encoding of the canonically relabeled graph, so it
    can be decoded back into a representative of the class.
    """
    from .graph6 import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def automorphism_group_size(g: Graph) -> int:
    """Order of Aut(g) by closing the generator set (small groups only)."""
    gens = canonical_labeling(g.masks).generators
    ident = tuple(range(g.n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[p[v]] for v in range(g.n))
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(group)


def _multigraph_as_coloured(h: MultiGraph) -> tuple[list[int], list[int]]:
    # each edge instance becomes a colour-1 vertex joined to its two ends
    instances = h.edge_instances()
    size = h.n + len(instances)
    masks = [0] * size
    for i, (u, v, _) in enumerate(instances):
        x = h.n + i
        for w in (u, v):
            masks[x] |= 1 << w
            masks[w] |= 1 << x
    colors = [0] * h.n + [1] * len(instances)
    return masks, colors


def multigraph_canonical_form(h: MultiGraph) -> bytes:
    """Isomorphism-invariant byte string for a multigraph."""
    masks, colors = _multigraph_as_coloured(h)
    res = canonical_labeling(masks, colors)
    body = ",".join(format(m, "x") for m in res.cert)
    return f"M{h.n}:{len(masks) - h.n}:{body}".encode("ascii")
