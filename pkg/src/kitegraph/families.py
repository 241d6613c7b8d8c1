"""Named graph families with fixed vertex numbering.

Numbering (part of the public contract, tests rely on it):

* ``path(n)``: ``0 - 1 - ... - n-1``.
* ``cycle(n)``: the path plus the edge ``n-1 - 0``.
* ``complete(p)``: vertices ``0..p-1``.
* ``star(k)``: centre ``0``, leaves ``1..k``.
* ``kite(p, q)``: clique on ``0..p-1``; vertex ``p-1`` carries the path
  ``p - p+1 - ... - p+q-1``.  ``kite(p, 0)`` is ``K_p`` and for ``p <= 2``
  the kite is just the path on ``p + q`` vertices.
* ``lollipop(n, p)``: cycle on ``0..p-1``; vertex ``p-1`` carries the path
  ``p .. n-1``.
* ``double_kite(p, q)``: ``kite(p, q)`` followed by a second clique on
  ``p+q .. 2p+q-1`` whose vertex ``p+q`` is joined to the last path vertex
  (to vertex ``p-1`` when ``q = 0``).
* ``starlike(l1, ..., ld)``: centre ``0``; branch ``i`` occupies the next
  ``li`` vertices in order, its first vertex adjacent to the centre.
* ``smith_dn(n)``: the extended Dynkin tree on ``n+1`` vertices: a spine
  ``0 .. n-4`` with leaves ``n-3, n-2`` on vertex ``0`` and ``n-1, n`` on
  vertex ``n-4``.  ``smith_dn(4)`` is ``K_{1,4}``.
* ``smith_e6/e7/e8``: ``starlike(2,2,2)``, ``starlike(1,3,3)``,
  ``starlike(1,2,5)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, MultiGraph


class FamilyError(GraphError):
    """A family parameter lies outside the family's domain."""


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got n={n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got n={n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete(p: int) -> Graph:
    _need(p >= 1, f"complete graph needs p >= 1, got p={p}")
    return Graph.from_edges(p, combinations(range(p), 2))


def star(k: int) -> Graph:
    _need(k >= 1, f"star K_1,k needs k >= 1, got k={k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def _tail(edges: list[tuple[int, int]], anchor: int, start: int, length: int) -> None:
    prev = anchor
    for v in range(start, start + length):
        edges.append((prev, v))
        prev = v


def kite(p: int, q: int) -> Graph:
    _need(p >= 1, f"kite needs p >= 1, got p={p}")
    _need(q >= 0, f"kite needs q >= 0, got q={q}")
    edges = list(combinations(range(p), 2))
    _tail(edges, p - 1, p, q)
    return Graph.from_edges(p + q, edges)


def lollipop(n: int, p: int) -> Graph:
    _need(p >= 3, f"lollipop needs cycle length p >= 3, got p={p}")
    _need(n >= p, f"lollipop needs n >= p, got n={n}, p={p}")
    edges = [(i, i + 1) for i in range(p - 1)] + [(p - 1, 0)]
    _tail(edges, p - 1, p, n - p)
    return Graph.from_edges(n, edges)


def double_kite(p: int, q: int) -> Graph:
    _need(p >= 1, f"double kite needs p >= 1, got p={p}")
    _need(q >= 0, f"double kite needs q >= 0, got q={q}")
    edges = list(combinations(range(p), 2))
    _tail(edges, p - 1, p, q)
    second = range(p + q, 2 * p + q)
    edges += list(combinations(second, 2))
    edges.append((p + q - 1, p + q))
    return Graph.from_edges(2 * p + q, edges)


def starlike(*lengths: int) -> Graph:
    if len(lengths) == 1 and not isinstance(lengths[0], int):
        lengths = tuple(lengths[0])
    _need(len(lengths) >= 3, f"starlike tree needs at least 3 branches, got {len(lengths)}")
    _need(all(l >= 1 for l in lengths), f"starlike branch lengths must be >= 1, got {lengths}")
    edges: list[tuple[int, int]] = []
    nxt = 1
    for l in lengths:
        _tail(edges, 0, nxt, l)
        nxt += l
    return Graph.from_edges(nxt, edges)


def smith_dn(n: int) -> Graph:
    _need(n >= 4, f"extended D_n needs n >= 4, got n={n}")
    spine = n - 3
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(0, spine), (0, spine + 1), (spine - 1, spine + 2), (spine - 1, spine + 3)]
    return Graph.from_edges(n + 1, edges)


def smith_e6() -> Graph:
    return starlike(2, 2, 2)


def smith_e7() -> Graph:
    return starlike(1, 3, 3)


def smith_e8() -> Graph:
    return starlike(1, 2, 5)


def b_graph(h: Graph, petals: Sequence[int]) -> MultiGraph:
    """Attach ``petals[i]`` pendant double edges at vertex ``i`` of ``h``.

    New petal vertices are numbered ``h.n, h.n+1, ...`` in vertex order.
    """
    if len(petals) != h.n:
        raise GraphError(f"need {h.n} petal counts, got {len(petals)}")
    if any(a < 0 for a in petals):
        raise GraphError("petal counts must be non-negative")
    edges = list(h.edges())
    nxt = h.n
    for v, a in enumerate(petals):
        for _ in range(a):
            edges += [(v, nxt), (v, nxt)]
            nxt += 1
    return MultiGraph.from_edges(nxt, edges)


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters, e.g. ``kite:p=5,q=3``."""

    family: str
    params: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        m = re.fullmatch(r"\s*([A-Za-z_0-9]+)\s*(?::(.*))?", text)
        if not m:
            raise FamilyError(f"cannot parse family spec {text!r}")
        family, rest = m.group(1), (m.group(2) or "").strip()
        params: dict = {}
        if rest:
            for item in re.split(r",(?=[a-z_]+=)", rest):
                key, sep, value = item.partition("=")
                if not sep:
                    raise FamilyError(f"expected key=value in {item!r}")
                key = key.strip()
                value = value.strip()
                try:
                    if key == "l":
                        params[key] = tuple(int(x) for x in value.strip("()").split(",") if x.strip())
                    else:
                        params[key] = int(value)
                except ValueError:
                    raise FamilyError(f"non-integer value in {item!r}") from None
        if family not in FAMILIES:
            raise FamilyError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}")
        return cls(family, params)

    def __str__(self) -> str:
        parts = []
        for key, value in self.params.items():
            if isinstance(value, tuple):
                value = ",".join(map(str, value))
            parts.append(f"{key}={value}")
        return self.family + (":" + ",".join(parts) if parts else "")


# family tag -> (required parameter names, constructor taking them in order)
FAMILIES = {
    "path": (("n",), path),
    "cycle": (("n",), cycle),
    "complete": (("p",), complete),
    "star": (("k",), star),
    "kite": (("p", "q"), kite),
    "lollipop": (("n", "p"), lollipop),
    "double_kite": (("p", "q"), double_kite),
    "starlike": (("l",), lambda l: starlike(*l)),
    "smith_Dn": (("n",), smith_dn),
    "smith_dn": (("n",), smith_dn),
    "smith_E6": ((), smith_e6),
    "smith_E7": ((), smith_e7),
    "smith_E8": ((), smith_e8),
    "smith_e6": ((), smith_e6),
    "smith_e7": ((), smith_e7),
    "smith_e8": ((), smith_e8),
}


def make_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    try:
        names, build = FAMILIES[spec.family]
    except KeyError:
        raise FamilyError(f"unknown family {spec.family!r}") from None
    missing = [k for k in names if k not in spec.params]
    extra = [k for k in spec.params if k not in names]
    if missing or extra:
        raise FamilyError(f"{spec.family} takes parameters {names}; missing {missing}, unexpected {extra}")
    return build(*(spec.params[k] for k in names))
