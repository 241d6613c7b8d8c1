"""Reproducible checks of the kite-graph results, one function per claim.

Each check returns a :class:`ClaimResult`; ``run_claims`` drives a
selection of them.  Randomised graph sets are drawn from
``random.Random(seed)`` so a run is repeatable.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable

import numpy as np

from . import families as fam
from .canon import canonical_form, is_isomorphic
from .census import (
    KNOWN_COUNTS,
    brute_force_form,
    cospectral_classes,
    ds_check,
    enumerate_graphs,
    labeled_dedup_count,
    trees,
)
from .exact import (
    MatrixKind,
    batch_charpolys,
    berkowitz,
    certify_lambda_min_ge,
    certify_rho_le,
    charpoly,
    charpoly_pendant_recurrence,
    count_eigenvalues_ge,
    discriminant,
    matrix_rows,
    trace_powers,
    verify_line_identity,
    verify_subdivision_identity,
)
from .generators import random_odd_unicyclic
from .graph import Graph, disjoint_union
from .spectra import check_interlacing, eigenvalues, path_eigenvalues
from .structure import ROOT_SEARCH_MAX_N, is_smith, root_graph_search, triangle_count
from .transforms import delete_vertex, generalized_line_graph, line_graph, subdivision

UNICYCLIC_SAMPLES = 500
KITE_P = range(4, 12)
KITE_Q = range(0, 21)
LAMBDA2_FLOAT_MARGIN = 1e-8


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.claim:<18} {self.seconds:7.2f}s  {self.detail}"


@dataclass
class Context:
    seed: int = 0
    jobs: int = 1
    cache_dir: str | None = None


def _fail(what: str, g: Graph | None = None) -> tuple[bool, str]:
    from .graph6 import to_graph6

    return False, what + (f" ({to_graph6(g)})" if g is not None else "")


def _small_trees(max_edges: int, min_edges: int = 0) -> list[Graph]:
    return [t for n in range(min_edges + 1, max_edges + 2) for t in trees(n)]


def _unicyclic_sample(seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_odd_unicyclic(rng.randint(3, 10), rng) for _ in range(UNICYCLIC_SAMPLES)]


# ------------------------------------------------------------------ claims


def paths(ctx: Context) -> tuple[bool, str]:
    worst = 0.0
    for n in range(1, 33):
        got = np.array(eigenvalues(fam.path(n)).values)
        worst = max(worst, float(np.abs(got - path_eigenvalues(n)).max()))
    ok = worst <= 1e-10
    return ok, f"n=1..32, max deviation {worst:.1e}"


def line_identity(ctx: Context) -> tuple[bool, str]:
    return _identity(ctx, verify_line_identity)


def subdivision_identity(ctx: Context) -> tuple[bool, str]:
    return _identity(ctx, verify_subdivision_identity)


def _identity(ctx: Context, check) -> tuple[bool, str]:
    ts = _small_trees(10)
    us = _unicyclic_sample(ctx.seed)
    for g in ts + us:
        if not check(g):
            return _fail("identity differs", g)
    return True, f"{len(ts)} trees (<=10 edges), {len(us)} odd unicyclic (n<=10): exact"


def discriminants(ctx: Context) -> tuple[bool, str]:
    ts = _small_trees(10, min_edges=2)
    for t in ts:
        lt = line_graph(t)
        if discriminant(lt) != lt.n + 1:
            return _fail("d(L(T)) != n+1", t)
    us = _unicyclic_sample(ctx.seed)
    for u in us:
        if discriminant(line_graph(u)) != 4:
            return _fail("d(L(U)) != 4", u)
    petalled = 0
    for t in _small_trees(8):
        for v in range(t.n):
            if discriminant(generalized_line_graph(t, [int(u == v) for u in range(t.n)])) != 4:
                return _fail(f"d(GL(T; petal at {v})) != 4", t)
            petalled += 1
    return True, f"{len(ts)} tree line graphs, {len(us)} unicyclic, {petalled} one-petal B-graphs"


def pendant_recurrence(ctx: Context) -> tuple[bool, str]:
    checked = 0
    for n in range(2, 9):
        graphs = enumerate_graphs(n, cache_dir=ctx.cache_dir, jobs=ctx.jobs)
        pend = [g for g in graphs if g.pendant_vertices()]
        table = batch_charpolys([g.masks for g in pend], n)
        for g, row in zip(pend, table):
            direct = tuple(int(c) for c in row)
            for x1 in g.pendant_vertices():
                if charpoly_pendant_recurrence(g, x1).coeffs != direct:
                    return _fail(f"recurrence at vertex {x1}", g)
                checked += 1
    return True, f"{checked} (graph, pendant vertex) pairs, n<=8"


def spectral_invariants(ctx: Context) -> tuple[bool, str]:
    classes = 0
    for n in range(1, 8):
        report = cospectral_classes(n, cache_dir=ctx.cache_dir, jobs=ctx.jobs)
        for c in report.classes:
            keys = {
                (g.n, g.m, triangle_count(g), tuple(trace_powers(g, n)))
                for g in c.graphs()
            }
            if len(keys) != 1:
                return _fail("class members disagree", c.graphs()[0])
            classes += 1
    return True, f"{classes} nontrivial classes at n<=7 share n, m, t and tr(A^i), i<=n"


def _kite_root(p: int, q: int) -> Graph:
    # L(T(1, ..., 1, q + 1)) is kite(p, q)
    return fam.starlike(*([1] * (p - 1) + [q + 1]))


def second_eigenvalue(ctx: Context) -> tuple[bool, str]:
    """lambda_2(kite) < 2 by float, and exactly through the subdivided root.

    With ``T`` the starlike root and ``v`` its centre, ``S(T) - v`` is a
    union of paths, so ``lambda_1(S(T) - v) < 2`` is certified by a
    positive definite ``2I - A``.  Interlacing gives ``lambda_2(S(T)) < 2``;
    the subdivision and line identities, checked exactly for the same
    ``T``, carry the bound to ``lambda_2(L(T)) = mu_2(T) - 2 < 2``.  The
    inertia count of ``A(kite) - 2I`` confirms it directly.
    """
    worst = -np.inf
    for p in KITE_P:
        for q in KITE_Q:
            g = fam.kite(p, q)
            lam2 = eigenvalues(g).values[1]
            worst = max(worst, lam2)
            if not lam2 < 2 - LAMBDA2_FLOAT_MARGIN:
                return _fail(f"float lambda_2 = {lam2!r}", g)
            t = _kite_root(p, q)
            if not is_isomorphic(line_graph(t), g):
                return _fail("starlike root does not give the kite", g)
            if not (verify_line_identity(t) and verify_subdivision_identity(t)):
                return _fail("identity fails on the root", t)
            s = subdivision(t)
            if not certify_rho_le(delete_vertex(s, 0), 2, strict=True):
                return _fail("S(T) - centre not certified below 2", t)
            if count_eigenvalues_ge(g, 2) != 1:
                return _fail("exact count of eigenvalues >= 2 is not 1", g)
    return True, f"p=4..11, q=0..20: max lambda_2 = {worst:.6f}, exact route certified"


def kite_bounds(ctx: Context) -> tuple[bool, str]:
    for p in KITE_P:
        for q in KITE_Q:
            g = fam.kite(p, q)
            if not certify_rho_le(g, p, strict=True):
                return _fail("lambda_1 < p not certified", g)
            if not certify_lambda_min_ge(g, -2, strict=True):
                return _fail("lambda_min > -2 not certified", g)
            if triangle_count(g) != comb(p, 3):
                return _fail("t != C(p, 3)", g)
            if charpoly(g).coeffs[0] == 0:
                return _fail("0 is an eigenvalue", g)
    grid = len(KITE_P) * len(KITE_Q)
    return True, f"{grid} kites: lambda_1 < p, lambda_min > -2 (exact), t = C(p,3), 0 not an eigenvalue"


def _all_ds(graphs: list[Graph], ctx: Context) -> tuple[bool, str]:
    for g in graphs:
        verdict = ds_check(g, cache_dir=ctx.cache_dir, jobs=ctx.jobs)
        if not verdict:
            return _fail(f"has cospectral mates {list(verdict.mates)}", g)
    return True, ""


def kites_ds(ctx: Context) -> tuple[bool, str]:
    graphs = [fam.kite(p, n - p) for n in range(2, 10) for p in range(2, n + 1)]
    ok, why = _all_ds(graphs, ctx)
    return (ok, why) if not ok else (True, f"{len(graphs)} kites, p>=2, p+q<=9: DS in the full census")


def lollipops_ds(ctx: Context) -> tuple[bool, str]:
    graphs = [fam.lollipop(n, p) for n in range(3, 10) for p in range(3, n + 1, 2)]
    ok, why = _all_ds(graphs, ctx)
    return (ok, why) if not ok else (True, f"{len(graphs)} odd lollipops, n<=9: DS in the full census")


def census_counts(ctx: Context) -> tuple[bool, str]:
    expected = tuple(KNOWN_COUNTS[n] for n in range(1, 9))
    got = tuple(len(list(enumerate_graphs(n, cache_dir=ctx.cache_dir, jobs=ctx.jobs))) for n in range(1, 9))
    if got != expected:
        return False, f"counts {got} != {expected}"
    for n in range(1, 7):
        if labeled_dedup_count(n) != got[n - 1]:
            return False, f"labeled dedup disagrees at n={n}"
    return True, f"counts {got}; n<=6 re-derived by labeled dedup"


def _oracle_classes(n: int) -> list[frozenset[tuple[int, ...]]]:
    """Nontrivial adjacency classes from all labelled graphs, deduplicated by brute force."""
    pairs = list(combinations(range(n), 2))
    reps = {}
    for bits in range(1 << len(pairs)):
        masks = [0] * n
        for k, (u, v) in enumerate(pairs):
            if bits >> k & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        form = brute_force_form(n, masks)
        reps.setdefault(form, masks)
    groups: dict[tuple[int, ...], set] = {}
    for form, masks in reps.items():
        poly = berkowitz(matrix_rows(Graph._trusted(n, tuple(masks)))).coeffs
        groups.setdefault(poly, set()).add(form)
    return sorted((frozenset(s) for s in groups.values() if len(s) > 1), key=sorted)


def smallest_pair(ctx: Context) -> tuple[bool, str]:
    for n in range(1, 5):
        if cospectral_classes(n, cache_dir=ctx.cache_dir).classes or _oracle_classes(n):
            return False, f"a cospectral pair already exists at n={n}"
    report = cospectral_classes(5, cache_dir=ctx.cache_dir)
    expected = sorted([canonical_form(fam.star(4)).decode(),
                       canonical_form(disjoint_union(fam.cycle(4), Graph.empty(1))).decode()])
    if [list(c.members) for c in report.classes] != [expected]:
        return False, f"census classes {[c.members for c in report.classes]}"
    oracle = _oracle_classes(5)
    census = [frozenset(brute_force_form(5, g.masks) for g in c.graphs()) for c in report.classes]
    if oracle != census:
        return False, "census and labelled-graph oracle disagree"
    return True, "n=5: only {K_{1,4}, C4 u K1}; none for n<=4; oracle agrees"


def smith_graphs() -> list[tuple[str, Graph]]:
    out = [(f"C{n}", fam.cycle(n)) for n in range(3, 10)]
    out += [(f"D~{n}", fam.smith_dn(n)) for n in range(4, 9)]
    out += [("E~6", fam.smith_e6()), ("E~7", fam.smith_e7()), ("E~8", fam.smith_e8())]
    return out


def smith(ctx: Context) -> tuple[bool, str]:
    deleted = 0
    for name, g in smith_graphs():
        if not is_smith(g):
            return _fail(f"{name} not recognised", g)
        for v in range(g.n):
            h = delete_vertex(g, v)
            if not certify_rho_le(h, 2, strict=True):
                return _fail(f"{name} - {v}: rho < 2 not certified", h)
            for comp in h.components():
                if is_smith(h.induced(comp)):
                    return _fail(f"{name} - {v} has a Smith component", h)
            deleted += 1
    return True, f"{len(smith_graphs())} Smith graphs certified rho = 2; {deleted} deletions certified rho < 2"


def root_search(ctx: Context) -> tuple[bool, str]:
    ts = _small_trees(10, min_edges=1)
    for t in ts:
        roots = root_graph_search(line_graph(t))
        if not any(r.is_simple and is_isomorphic(r.graph.to_graph(), t) for r in roots):
            return _fail("tree not among the roots of its line graph", t)
    k3 = root_graph_search(fam.complete(3))
    if len(k3) != 2:
        return False, f"K3 has {len(k3)} roots"
    return True, f"{len(ts)} trees (1..10 edges) recovered; K3 has exactly 2 roots"


# ------------------------------------------------------------------ registry


CLAIMS: dict[str, tuple[str, Callable[[Context], tuple[bool, str]]]] = {
    "lemma2.1": ("path eigenvalues are 2cos(pi j/(n+1))", paths),
    "lemma2.3": ("line graph / signless Laplacian identity", line_identity),
    "lemma2.4": ("subdivision / signless Laplacian identity", subdivision_identity),
    "lemma2.8": ("discriminants of tree, unicyclic and one-petal line graphs", discriminants),
    "lemma2.10": ("pendant-vertex recurrence", pendant_recurrence),
    "lemma2.11": ("cospectral graphs share traces, n, m, triangles", spectral_invariants),
    "lemma3.1": ("lambda_2(kite) < 2", second_eigenvalue),
    "kite-bounds": ("lambda_1 < p and lambda_min > -2 for kites", kite_bounds),
    "theorem3.1:n<=9": ("kites are DS for p+q <= 9", kites_ds),
    "lemma2.13": ("odd lollipops are DS for n <= 9", lollipops_ds),
    "census-counts": ("unlabelled graph counts n=1..8", census_counts),
    "smallest-pair": ("smallest cospectral pair", smallest_pair),
    "lemma2.6": ("Smith graphs and their vertex-deleted subgraphs", smith),
    "root-search": ("root graphs of tree line graphs and K3", root_search),
}


def run_claim(claim: str, ctx: Context | None = None) -> ClaimResult:
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")
    ctx = ctx or Context()
    start = time.perf_counter()
    passed, detail = CLAIMS[claim][1](ctx)
    return ClaimResult(claim, bool(passed), detail, time.perf_counter() - start)


def run_claims(claims=None, ctx: Context | None = None):
    """Yield one result per claim, in registry order."""
    for claim in claims or CLAIMS:
        yield run_claim(claim, ctx)


# ------------------------------------------------------- single-graph checks
#
# ``verify CLAIM`` applies one of these to every input graph.  A graph
# outside a claim's hypothesis fails with the reason.


def _check_path(g: Graph) -> tuple[bool, str]:
    if g.n == 0 or not is_isomorphic(g, fam.path(g.n)):
        return False, "not a path"
    dev = float(np.abs(np.array(eigenvalues(g).values) - path_eigenvalues(g.n)).max())
    return dev <= 1e-10, f"max deviation {dev:.1e}"


def _check_interlacing(g: Graph) -> tuple[bool, str]:
    if g.n < 2:
        return False, "needs n >= 2"
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        res = check_interlacing(g, g.induced(keep), keep)
        if not res:
            return False, f"G - {v} violates at i={res.first_violation}"
    return True, f"all {g.n} vertex deletions interlace"


def _check_identity(check) -> Callable[[Graph], tuple[bool, str]]:
    def run(g: Graph) -> tuple[bool, str]:
        res = check(g)
        return res.holds, "exact equality" if res.holds else f"{res.lhs} != {res.rhs}"

    return run


def _check_discriminant(g: Graph) -> tuple[bool, str]:
    if g.n == 0 or not g.is_connected():
        return False, "needs a connected graph"
    if g.n > ROOT_SEARCH_MAX_N:
        return False, f"root search is capped at n={ROOT_SEARCH_MAX_N}"
    predicted = set()
    for r in root_graph_search(g):
        if r.kind == "tree":
            predicted.add(g.n + 1)
        elif r.kind in ("odd_unicyclic", "b_graph(tree, petals=1)"):
            predicted.add(4)
    if not predicted:
        return False, "not the line graph of a tree, odd unicyclic graph or one-petal tree"
    d = discriminant(g)
    return predicted == {d}, f"d = {d}, predicted {sorted(predicted)}"


def _check_pendant(g: Graph) -> tuple[bool, str]:
    pend = g.pendant_vertices()
    if not pend:
        return False, "no pendant vertex"
    direct = charpoly(g)
    bad = [x for x in pend if charpoly_pendant_recurrence(g, x) != direct]
    return not bad, f"{len(pend)} pendant vertices" + (f", mismatch at {bad}" if bad else "")


def _newton_traces(coeffs: tuple[int, ...], k_max: int) -> list[int]:
    # power sums of the roots of a monic polynomial from its coefficients
    n = len(coeffs) - 1
    e = [coeffs[n - i] if i <= n else 0 for i in range(k_max + 1)]  # e[i] = c_{n-i}
    p: list[int] = []
    for k in range(1, k_max + 1):
        s = -k * e[k] - sum(e[i] * p[k - i - 1] for i in range(1, k))
        p.append(s)
    return p


def _check_traces(g: Graph) -> tuple[bool, str]:
    if g.n == 0:
        return False, "needs n >= 1"
    walks = trace_powers(g, g.n)
    newton = _newton_traces(charpoly(g).coeffs, g.n)
    return walks == newton, f"tr(A^i) for i <= {g.n}" + ("" if walks == newton else f": {walks} != {newton}")


def _check_counts(g: Graph) -> tuple[bool, str]:
    c = charpoly(g).coeffs
    n = len(c) - 1
    at = lambda k: c[n - k] if k <= n else 0  # noqa: E731
    got = (n, at(1), -at(2), -at(3))
    want = (g.n, 0, g.m, 2 * triangle_count(g))
    return got == want, f"n={n}, m={got[2]}, t={got[3] // 2} from the polynomial"


def _check_second(g: Graph) -> tuple[bool, str]:
    big = [v for v in range(g.n) if g.degree(v) > 2]
    if not (g.is_connected() and g.m == g.n - 1 and len(big) == 1):
        return False, "not a starlike tree"
    lg = line_graph(g)
    centre_free = delete_vertex(subdivision(g), big[0])
    cert = certify_rho_le(centre_free, 2, strict=True)
    count = count_eigenvalues_ge(lg, 2)
    return bool(cert) and count <= 1, f"S(T) - centre rho < 2 {cert.verdict}; eigenvalues >= 2 of L(T): {count}"


GRAPH_CHECKS: dict[str, Callable[[Graph], tuple[bool, str]]] = {
    "lemma2.1": _check_path,
    "lemma2.2": _check_interlacing,
    "lemma2.3": _check_identity(verify_line_identity),
    "lemma2.4": _check_identity(verify_subdivision_identity),
    "lemma2.8": _check_discriminant,
    "lemma2.10": _check_pendant,
    "lemma2.11": _check_traces,
    "lemma2.12": _check_counts,
    "lemma3.1": _check_second,
}


def verify_graph(claim: str, g: Graph) -> tuple[bool, str]:
    if claim not in GRAPH_CHECKS:
        raise KeyError(f"no single-graph check for {claim!r}; known: {', '.join(GRAPH_CHECKS)}")
    return GRAPH_CHECKS[claim](g)
