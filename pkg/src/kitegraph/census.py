"""Isomorph-free enumeration of small graphs and cospectral censuses.

Graphs of order ``n`` are generated from those of order ``n - 1`` by
canonical augmentation: a new vertex ``v`` joined to a subset ``S`` is
kept only when ``v`` lies in the automorphism orbit of a vertex chosen
isomorphism-invariantly (the last vertex, in canonical order, of the last
cell of the refined unit partition), and subsets are taken one per orbit
of the parent's automorphism group.  Each isomorphism class then appears
exactly once.

Cospectral classes are keyed by exact integer characteristic polynomials,
never by floating eigenvalues.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .canon import _orbit_roots, canonical_form, canonical_labeling, refine
from .exact import MatrixKind, batch_charpolys, charpoly
from .graph import Graph, GraphError
from .graph6 import from_graph6, to_graph6
from .poly import IntPoly

log = logging.getLogger(__name__)

CENSUS_MAX_N = 9
GENERATOR_VERSION = "kitegraph-orderly-1"
CACHE_ENV = "KITEGRAPH_CACHE_DIR"

# OEIS A000088, used only in messages; the tests re-derive the small terms
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


class CensusError(GraphError):
    pass


def _check_order(n: int) -> None:
    if not 1 <= n <= CENSUS_MAX_N:
        raise CensusError(f"census order must be in 1..{CENSUS_MAX_N}, got {n}")


# ------------------------------------------------------------ generation


def _subset_image(s: int, g: list[int]) -> int:
    out = 0
    while s:
        low = s & -s
        out |= 1 << g[low.bit_length() - 1]
        s ^= low
    return out


def _children(masks: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Accepted one-vertex extensions of a parent graph."""
    n1 = len(masks)
    n = n1 + 1
    v = n1
    bitv = 1 << v
    gens = canonical_labeling(masks).generators if n1 > 1 else []
    degs = [m.bit_count() for m in masks]
    top = max(degs, default=0)
    top_mask = 0
    for u, d in enumerate(degs):
        if d == top:
            top_mask |= 1 << u
    seen: set[int] | None = set() if gens else None
    out = []
    for s in range(1 << n1):
        if seen is not None:
            if s in seen:
                continue
            orbit = {s}
            frontier = [s]
            while frontier:
                nxt = []
                for t in frontier:
                    for g in gens:
                        img = _subset_image(t, g)
                        if img not in orbit:
                            orbit.add(img)
                            nxt.append(img)
                frontier = nxt
            seen |= orbit
        # the chosen vertex has maximum degree, so v must as well
        if s.bit_count() < (top + 1 if s & top_mask else top):
            continue
        child = list(masks)
        t = s
        while t:
            low = t & -t
            child[low.bit_length() - 1] |= bitv
            t ^= low
        child.append(s)
        cells = refine(child, [list(range(n))])
        last = cells[-1]
        if v not in last:
            continue
        if len(last) > 1:
            lab = canonical_labeling(child, cells=cells)
            pos = {x: i for i, x in enumerate(lab.lab)}
            rep = max(last, key=pos.__getitem__)
            if rep != v:
                roots = _orbit_roots(n, lab.generators)
                if roots[rep] != roots[v]:
                    continue
        out.append(tuple(child))
    return out


def _expand_chunk(parents: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out = []
    for p in parents:
        out.extend(_children(p))
    return out


def _next_level(parents: list[tuple[int, ...]], jobs: int = 1) -> list[tuple[int, ...]]:
    if jobs <= 1 or len(parents) < 64:
        return _expand_chunk(parents)
    from concurrent.futures import ProcessPoolExecutor

    size = max(1, len(parents) // (jobs * 8))
    chunks = [parents[i:i + size] for i in range(0, len(parents), size)]
    out: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves chunk order, so the result does not depend on jobs
        for part in pool.map(_expand_chunk, chunks):
            out.extend(part)
    return out


def _cache_root(cache_dir: str | os.PathLike | None) -> Path | None:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV)
    return Path(cache_dir) if cache_dir else None


def _header(n: int, what: str, count: int) -> str:
    return f"# {GENERATOR_VERSION} n={n} {what} count={count}"


def _read_cached(path: Path, n: int, what: str) -> list[str] | None:
    if not path.exists():
        return None
    lines = path.read_text(encoding="ascii").splitlines()
    if not lines or not lines[0].startswith(f"# {GENERATOR_VERSION} n={n} {what} "):
        log.warning("ignoring stale census cache %s", path)
        return None
    body = lines[1:]
    try:
        count = int(lines[0].rsplit("count=", 1)[1])
    except (IndexError, ValueError):
        return None
    if count != len(body):
        log.warning("ignoring truncated census cache %s", path)
        return None
    return body


def _write_cached(path: Path, n: int, what: str, body: list[str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text("\n".join([_header(n, what, len(body))] + body) + "\n", encoding="ascii")
    tmp.replace(path)


_levels: dict[int, list[tuple[int, ...]]] = {0: [()]}


def _level_masks(n: int, cache_dir=None, jobs: int = 1) -> list[tuple[int, ...]]:
    if n in _levels:
        return _levels[n]
    root = _cache_root(cache_dir)
    path = root / f"graphs-n{n}.g6" if root else None
    if path is not None:
        body = _read_cached(path, n, "graphs")
        if body is not None:
            _levels[n] = [from_graph6(s).masks for s in body]
            return _levels[n]
    level = _next_level(_level_masks(n - 1, cache_dir, jobs), jobs)
    _levels[n] = level
    if path is not None:
        _write_cached(path, n, "graphs", [to_graph6(Graph._trusted(n, m)) for m in level])
    return level


def enumerate_graphs(n: int, connected_only: bool = False, *, cache_dir=None, jobs: int = 1,
                     canonical: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n``, in a fixed order.

    With ``canonical=True`` each graph is canonically relabeled.
    """
    _check_order(n)
    for masks in _level_masks(n, cache_dir, jobs):
        g = Graph._trusted(n, masks)
        if connected_only and not g.is_connected():
            continue
        if canonical:
            g = Graph._trusted(n, canonical_labeling(masks).cert)
        yield g


def brute_force_form(n: int, masks: Sequence[int]) -> tuple[int, ...]:
    """Smallest relabeled mask tuple over all degree-sorting permutations.

    Exponential and independent of :mod:`kitegraph.canon`; an oracle for
    small ``n`` only.
    """
    degs = [m.bit_count() for m in masks]
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(degs):
        classes.setdefault(d, []).append(v)
    blocks = [classes[d] for d in sorted(classes)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        relabeled = tuple(sum(1 << pos[u] for u in range(n) if masks[v] >> u & 1) for v in order)
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()


def labeled_dedup_count(n: int) -> int:
    """Isomorphism classes of order ``n`` by brute force over all labeled graphs."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    forms = set()
    for code in range(1 << len(pairs)):
        masks = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        forms.add(brute_force_form(n, masks))
    return len(forms)


# ------------------------------------------------------------ cospectrality


def _poly_table(n: int, kind: MatrixKind, cache_dir=None, jobs: int = 1) -> np.ndarray:
    key = (n, kind, str(_cache_root(cache_dir)))
    if key in _poly_tables:
        return _poly_tables[key]
    level = _level_masks(n, cache_dir, jobs)
    root = _cache_root(cache_dir)
    path = root / f"charpoly-n{n}-{kind.value}.txt" if root else None
    table = None
    if path is not None:
        body = _read_cached(path, n, f"charpoly-{kind.value}")
        if body is not None and len(body) == len(level):
            table = np.array([[int(x) for x in line.split()[1:]] for line in body], dtype=np.int64)
    if table is None:
        parts = [batch_charpolys(level[i:i + 20000], n, kind) for i in range(0, len(level), 20000)]
        table = np.concatenate(parts) if parts else np.zeros((0, n + 1), dtype=np.int64)
        if path is not None:
            body = [to_graph6(Graph._trusted(n, m)) + " " + " ".join(map(str, row))
                    for m, row in zip(level, table.tolist())]
            _write_cached(path, n, f"charpoly-{kind.value}", body)
    _poly_tables[key] = table
    return table


_poly_tables: dict = {}


@dataclass(frozen=True)
class CospectralClass:
    charpoly: IntPoly
    members: tuple[str, ...]  # canonical graph6, sorted

    def graphs(self) -> list[Graph]:
        return [from_graph6(s) for s in self.members]


@dataclass
class CensusReport:
    n: int
    kind: MatrixKind
    connected_only: bool
    total: int
    classes: list[CospectralClass]
    verdicts: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind.value,
            "connected_only": self.connected_only,
            "generator_version": GENERATOR_VERSION,
            "total_classes": self.total,
            "cospectral_classes": [
                {"charpoly": list(c.charpoly.coeffs), "members": list(c.members)} for c in self.classes
            ],
            "verdicts": dict(sorted(self.verdicts.items())),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _rows(n: int, kind, connected_only: bool, cache_dir, jobs) -> tuple[list[tuple[int, ...]], np.ndarray]:
    kind = MatrixKind.parse(kind)
    level = _level_masks(n, cache_dir, jobs)
    table = _poly_table(n, kind, cache_dir, jobs)
    if connected_only:
        keep = _connected_rows(n, level)
        return [level[i] for i in keep], table[keep]
    return level, table


_connected: dict[int, np.ndarray] = {}


def _connected_rows(n: int, level: list[tuple[int, ...]]) -> np.ndarray:
    if n not in _connected:
        _connected[n] = np.array([i for i, m in enumerate(level) if Graph._trusted(n, m).is_connected()], dtype=np.intp)
    return _connected[n]


def cospectral_classes(n: int, kind: MatrixKind | str = MatrixKind.ADJACENCY, connected_only: bool = False,
                       *, cache_dir=None, jobs: int = 1) -> CensusReport:
    """Group all order-``n`` graphs by exact characteristic polynomial."""
    _check_order(n)
    kind = MatrixKind.parse(kind)
    level, table = _rows(n, kind, connected_only, cache_dir, jobs)
    groups: dict[bytes, list[int]] = {}
    for i, row in enumerate(table):
        groups.setdefault(row.tobytes(), []).append(i)
    classes = []
    for idx in groups.values():
        if len(idx) < 2:
            continue
        members = sorted(canonical_form(Graph._trusted(n, level[i])).decode() for i in idx)
        classes.append(CospectralClass(IntPoly(int(x) for x in table[idx[0]]), tuple(members)))
    classes.sort(key=lambda c: (c.charpoly.coeffs, c.members))
    return CensusReport(n, kind, connected_only, len(level), classes)


@dataclass(frozen=True)
class DSVerdict:
    graph: str
    kind: MatrixKind
    connected_only: bool
    mates: tuple[str, ...]  # canonical graph6 of cospectral non-isomorphic graphs

    @property
    def is_ds(self) -> bool:
        return not self.mates

    def __bool__(self) -> bool:
        return self.is_ds


def ds_check(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY, connected_only: bool = False,
             *, cache_dir=None, jobs: int = 1) -> DSVerdict:
    """Is ``g`` determined by its spectrum among all (or connected) graphs of its order?"""
    _check_order(g.n)
    kind = MatrixKind.parse(kind)
    n = g.n
    target = np.array(charpoly(g, kind).coeffs, dtype=np.int64)
    level, table = _rows(n, kind, connected_only, cache_dir, jobs)
    hits = np.nonzero((table == target[None, :]).all(axis=1))[0]
    own = canonical_form(g).decode()
    forms = sorted(canonical_form(Graph._trusted(n, level[i])).decode() for i in hits)
    in_scope = g.is_connected() or not connected_only
    if in_scope and own not in forms:
        raise CensusError("graph missing from its own census; enumeration is broken")
    mates = tuple(f for f in forms if f != own)
    return DSVerdict(own, kind, connected_only, mates)


def _kite_forms(n: int) -> set[str]:
    from .families import kite

    return {canonical_form(kite(p, n - p)).decode() for p in range(1, n + 1)}


def connectivity_filter_report(n: int, *, cache_dir=None, jobs: int = 1) -> dict:
    """Adjacency-cospectral classes of order ``n`` split by connectivity and kite membership."""
    report = cospectral_classes(n, MatrixKind.ADJACENCY, cache_dir=cache_dir, jobs=jobs)
    kites = _kite_forms(n)
    details = []
    for c in report.classes:
        conn = [from_graph6(s).is_connected() for s in c.members]
        details.append({
            "charpoly": list(c.charpoly.coeffs),
            "members": list(c.members),
            "has_kite": any(s in kites for s in c.members),
            "connected": sum(conn),
            "disconnected": len(conn) - sum(conn),
            "mixed": any(conn) and not all(conn),
        })
    return {
        "n": n,
        "nontrivial_classes": len(details),
        "mixed_classes": sum(d["mixed"] for d in details),
        "classes_with_kite": sum(d["has_kite"] for d in details),
        "classes": details,
    }


# ------------------------------------------------------------ trees


@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    seen = {}
    for masks in _tree_level(n - 1):
        for v in range(n - 1):
            child = list(masks) + [1 << v]
            child[v] |= 1 << (n - 1)
            cert = canonical_labeling(child).cert
            seen.setdefault(cert, cert)
    return tuple(sorted(seen))


def trees(n: int) -> list[Graph]:
    """All trees on ``n`` vertices up to isomorphism (canonically labeled)."""
    if n < 1:
        raise GraphError("trees need n >= 1")
    return [Graph._trusted(n, m) for m in _tree_level(n)]


def iter_graphs(orders: Iterable[int], connected_only: bool = False, **kw) -> Iterator[Graph]:
    for n in orders:
        yield from enumerate_graphs(n, connected_only, **kw)
