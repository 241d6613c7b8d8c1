import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from kitegraph import (
    Graph,
    GraphError,
    check_interlacing,
    complete,
    cycle,
    eigenvalues,
    kite,
    least_eigenvalue,
    path,
    second_largest,
    spectral_radius,
    star,
)
from kitegraph.generators import random_graph
from kitegraph.spectra import cycle_eigenvalues, path_eigenvalues


def test_eigenvalue_examples():
    assert np.allclose(eigenvalues(path(3)).values, [2**0.5, 0, -(2**0.5)], atol=1e-10)
    assert np.allclose(eigenvalues(complete(4)).values, [3, -1, -1, -1], atol=1e-10)
    assert np.allclose(eigenvalues(star(3), "signless").values, [4, 1, 1, 0], atol=1e-10)


@pytest.mark.parametrize("n", range(1, 33))
def test_path_closed_form(n):
    rep = eigenvalues(path(n))
    assert np.abs(np.array(rep.values) - path_eigenvalues(n)).max() <= 1e-10
    assert rep.err_bound < 1e-12


@pytest.mark.parametrize("n", range(3, 20))
def test_cycle_closed_form(n):
    assert np.allclose(eigenvalues(cycle(n)).values, cycle_eigenvalues(n), atol=1e-10)
    assert abs(spectral_radius(cycle(n)) - 2) < 1e-12


def test_radius_and_second_examples():
    assert abs(spectral_radius(path(2)) - 1) < 1e-12
    # kite(4, 0) is K_4 with radius exactly 3; any tail pushes it strictly above
    assert abs(spectral_radius(kite(4, 0)) - 3) < 1e-12
    for q in range(1, 21):
        assert 3 < spectral_radius(kite(4, q)) < 4
    assert abs(second_largest(cycle(6)) - 1) < 1e-12
    assert abs(second_largest(complete(4)) + 1) < 1e-12
    with pytest.raises(GraphError):
        second_largest(complete(1))
    with pytest.raises(GraphError):
        eigenvalues(Graph.empty(0))


@pytest.mark.parametrize("p", range(4, 12))
def test_kite_second_eigenvalue_below_two(p):
    for q in range(21):
        assert second_largest(kite(p, q)) < 2 - 1e-8


@given(graphs(min_n=1, max_n=9))
def test_values_sorted_and_bounded(g):
    rep = eigenvalues(g)
    assert list(rep.values) == sorted(rep.values, reverse=True)
    assert rep.err_bound < 1e-10
    assert abs(sum(rep.values)) < 1e-9  # trace of A is zero
    assert abs(sum(x * x for x in rep.values) - 2 * g.m) < 1e-9
    assert least_eigenvalue(g) >= -spectral_radius(g) - 1e-9


@given(graphs(min_n=1, max_n=9))
def test_laplacian_zero_multiplicity_counts_components(g):
    vals = eigenvalues(g, "laplacian").values
    assert min(vals) > -1e-9
    assert sum(abs(v) < 1e-8 for v in vals) == len(g.components())
    q = eigenvalues(g, "signless").values
    # signless Laplacian zero eigenvalues count bipartite components
    bip = sum(g.induced(c).is_bipartite() for c in g.components())
    assert sum(abs(v) < 1e-8 for v in q) == bip


def test_interlacing_examples():
    g = path(3)
    assert check_interlacing(g, path(2), [0, 1]).holds
    assert check_interlacing(g, g, list(range(3))).holds
    with pytest.raises(GraphError):
        check_interlacing(g, path(2), [0, 2])  # 0 and 2 are not adjacent in P_3


def test_interlacing_random_pairs():
    rng = random.Random(2024)
    for _ in range(500):
        n = rng.randint(1, 9)
        g = random_graph(n, rng.random(), rng)
        k = rng.randint(0, n)
        emb = rng.sample(range(n), k)
        res = check_interlacing(g, g.induced(emb), emb)
        assert res.holds and res.first_violation is None


def test_interlacing_reports_violations_of_forged_spectra(monkeypatch):
    # a non-induced subgraph with a larger radius must be flagged
    import kitegraph.spectra as sp

    g = path(4)
    h = path(2)
    real = sp.eigenvalues

    def fake(x, kind="adjacency"):
        rep = real(x, kind)
        if x.n == 2:
            return sp.SpectrumReport(rep.kind, (5.0, -5.0), rep.err_bound)
        return rep

    monkeypatch.setattr(sp, "eigenvalues", fake)
    res = sp.check_interlacing(g, h, [0, 1])
    assert not res.holds and res.first_violation == 1


@given(st.integers(1, 40))
def test_path_closed_form_is_descending(n):
    v = path_eigenvalues(n)
    assert np.all(np.diff(v) < 0)
