import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import graphs, to_nx
from kitegraph import (
    Graph,
    IntPoly,
    MatrixKind,
    certify_lambda_min_ge,
    certify_rho_le,
    charpoly,
    charpoly_pendant_recurrence,
    complete,
    cycle,
    discriminant,
    inertia,
    kite,
    path,
    star,
    trace_powers,
    verify_line_identity,
    verify_subdivision_identity,
)
from kitegraph.exact import batch_charpolys, berkowitz, count_eigenvalues_ge, is_positive_semidefinite, matrix_rows
from kitegraph.generators import random_odd_unicyclic, random_tree

KINDS = list(MatrixKind)


def _sympy_charpoly(rows) -> tuple[int, ...]:
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix(rows).charpoly(x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


# ------------------------------------------------------------ IntPoly


@given(st.lists(st.integers(-50, 50), max_size=6), st.lists(st.integers(-50, 50), max_size=6),
       st.integers(-5, 5))
def test_intpoly_ring_ops_evaluate_pointwise(a, b, x):
    p, q = IntPoly(a), IntPoly(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert p.compose(q)(x) == p(q(x))
    assert p.shift(3)(x) == p(x + 3)


def test_intpoly_basics():
    assert IntPoly((0, 0, 0)) == IntPoly() and IntPoly().degree == -1
    assert IntPoly.from_roots([1, 2]) == IntPoly((2, -3, 1))
    assert str(IntPoly((-2, -3, 0, 1))) == "x^3 - 3x - 2"
    assert str(IntPoly((0, -1))) == "-x"
    assert (IntPoly.x() + 1) ** 3 == IntPoly((1, 3, 3, 1))
    assert IntPoly((5,)) == 5
    with pytest.raises(ValueError):
        IntPoly.x() ** -1


# ------------------------------------------------------------ charpoly


def test_charpoly_examples():
    assert charpoly(complete(3)) == IntPoly((-2, -3, 0, 1))
    assert charpoly(path(3)).coeffs == (0, -2, 0, 1)
    assert charpoly(star(3), "signless").coeffs == (0, -4, 9, -6, 1)
    assert charpoly(Graph.empty(0)) == IntPoly((1,))


@given(graphs(min_n=1, max_n=7), st.sampled_from(KINDS))
def test_berkowitz_matches_sympy(g, kind):
    assert charpoly(g, kind).coeffs == _sympy_charpoly(matrix_rows(g, kind))


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=5, max_size=5))
def test_berkowitz_on_general_integer_matrices(rows):
    assert berkowitz(rows).coeffs == _sympy_charpoly(rows)


@given(st.lists(graphs(min_n=6, max_n=6), min_size=1, max_size=8), st.sampled_from(KINDS))
def test_batch_charpolys_matches_single(gs, kind):
    table = batch_charpolys([g.masks for g in gs], 6, kind)
    for g, row in zip(gs, table):
        assert tuple(int(c) for c in row) == charpoly(g, kind).coeffs


@given(graphs(min_n=1, max_n=8))
def test_laplacian_matrix_tree_theorem(g):
    import networkx as nx

    c = charpoly(g, MatrixKind.LAPLACIAN).coeffs
    assert c[0] == 0
    trees = round(nx.number_of_spanning_trees(to_nx(g))) if g.is_connected() else 0
    # coefficient of x is (-1)^(n-1) n tau(G)
    assert c[1] == (-1) ** (g.n - 1) * g.n * trees


@given(graphs(min_n=1, max_n=8))
def test_charpoly_roots_match_numpy(g):
    roots = np.sort(np.roots(charpoly(g).coeffs[::-1]).real)
    eig = np.sort(np.linalg.eigvalsh(g.adjacency_matrix().astype(float)))
    assert np.allclose(roots, eig, atol=1e-4)


# ------------------------------------------------------------ discriminant


def test_discriminant_examples():
    assert discriminant(complete(3)) == 4
    assert discriminant(path(3)) == 4
    assert discriminant(complete(1)) == 2


@given(graphs(min_n=1, max_n=8))
def test_discriminant_is_product_over_spectrum(g):
    eig = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))
    assert discriminant(g) == round(float(np.prod(eig + 2)))


# ------------------------------------------------------------ identities


def test_line_identity_examples():
    res = verify_line_identity(star(3))
    assert res.holds
    # (x+2)(x^3-3x-2) on one side
    assert res.lhs == IntPoly((2, 1)) * IntPoly((-2, -3, 0, 1))
    assert verify_line_identity(cycle(3))


def test_subdivision_identity_example():
    res = verify_subdivision_identity(path(2))
    assert res.holds and res.lhs == IntPoly((0, 0, -2, 0, 1))


@given(graphs(max_n=7))
def test_line_identity_holds_for_every_graph(g):
    assert verify_line_identity(g)


@given(graphs(max_n=7))
def test_subdivision_identity_holds_for_every_graph(g):
    assert verify_subdivision_identity(g)


def test_identities_on_random_unicyclic():
    rng = random.Random(5)
    for _ in range(40):
        g = random_odd_unicyclic(rng.randint(3, 10), rng)
        assert g.m == g.n and not g.is_bipartite() and g.is_connected()
        assert verify_line_identity(g) and verify_subdivision_identity(g)


# ------------------------------------------------------------ pendant recurrence


def test_pendant_recurrence_examples():
    assert charpoly_pendant_recurrence(path(2), 0) == IntPoly((-1, 0, 1))
    assert charpoly_pendant_recurrence(path(3), 0) == IntPoly((0, -2, 0, 1))
    k = kite(4, 1)
    assert charpoly_pendant_recurrence(k, 4) == charpoly(k)
    with pytest.raises(ValueError):
        charpoly_pendant_recurrence(k, 0)


@given(st.integers(2, 12), st.randoms(use_true_random=False))
def test_pendant_recurrence_on_random_trees(n, rnd):
    t = random_tree(n, rnd)
    assert t.m == n - 1 and t.is_connected()
    for x in t.pendant_vertices():
        assert charpoly_pendant_recurrence(t, x) == charpoly(t)


# ------------------------------------------------------------ certificates


def test_certificate_examples():
    assert certify_rho_le(path(5), 2, strict=True).proved
    assert not certify_rho_le(cycle(6), 2, strict=True).proved
    assert certify_rho_le(cycle(6), 2).proved
    assert not certify_rho_le(complete(4), 2).proved
    assert certify_lambda_min_ge(kite(5, 3), -2, strict=True).proved
    assert not certify_lambda_min_ge(cycle(4), -2, strict=True).proved
    assert certify_lambda_min_ge(cycle(4), -2).proved
    assert certify_rho_le(complete(4), 3).verdict == "proved"


def test_certificate_rational_bounds():
    # lambda_1(P_3) = sqrt 2 = 1.41421...
    assert certify_rho_le(path(3), Fraction(1414, 1000)).proved is False
    assert certify_rho_le(path(3), Fraction(1415, 1000)).proved is True
    assert certify_lambda_min_ge(path(3), Fraction(-1415, 1000)).proved is True
    assert certify_lambda_min_ge(path(3), Fraction(-1414, 1000)).proved is False


@given(graphs(min_n=1, max_n=8), st.fractions(-3, 3, max_denominator=7), st.booleans())
def test_certificates_agree_with_eigenvalues(g, b, strict):
    eig = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))
    top, low = eig[-1], eig[0]
    bf = float(b)
    # skip bounds within float noise of an eigenvalue; exactness is tested elsewhere
    if min(abs(top - bf), abs(low - bf)) < 1e-7:
        return
    assert certify_rho_le(g, b, strict).proved == (top < bf)
    assert certify_lambda_min_ge(g, b, strict).proved == (low > bf)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=5, max_size=5),
       st.booleans())
def test_psd_test_matches_eigenvalues(rows, strict):
    a = np.array(rows)
    sym = (a @ a.T if strict else a + a.T).tolist()  # Gram matrices are PSD, sums are often indefinite
    eig = np.linalg.eigvalsh(np.array(sym, dtype=float))
    ok, _ = is_positive_semidefinite(sym, strict)
    # integer matrices: eigenvalue 0 is exact, so float noise only blurs |x| < 1e-9
    expected = eig.min() > 1e-9 if strict else eig.min() > -1e-9
    assert ok == expected


@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=6, max_size=6))
def test_inertia_matches_eigenvalues(rows):
    a = np.array(rows)
    sym = a + a.T
    sym[2] = 0
    sym[:, 2] = 0  # force a zero eigenvalue and zero diagonal entries
    eig = np.linalg.eigvalsh(sym.astype(float))
    pos, neg, zero = inertia(sym.tolist())
    assert (pos, neg, zero) == (int((eig > 1e-9).sum()), int((eig < -1e-9).sum()), int((abs(eig) <= 1e-9).sum()))


def test_inertia_zero_diagonal_block():
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)


def test_count_eigenvalues_ge_is_exact_at_integers():
    # C_6 has eigenvalues 2, 1, 1, -1, -1, -2
    assert count_eigenvalues_ge(cycle(6), 2) == 1
    assert count_eigenvalues_ge(cycle(6), 1) == 3
    assert count_eigenvalues_ge(cycle(6), -2) == 6


# ------------------------------------------------------------ traces


def test_trace_power_examples():
    assert trace_powers(complete(3), 3) == [0, 6, 6]
    assert trace_powers(path(3), 3) == [0, 4, 0]
    assert trace_powers(kite(4, 1), 3) == [0, 14, 24]
    with pytest.raises(ValueError):
        trace_powers(path(3), 0)


@given(graphs(min_n=1, max_n=8), st.integers(1, 8))
def test_trace_powers_match_matrix_powers(g, k):
    a = g.adjacency_matrix().astype(object)
    expected = []
    p = a
    for _ in range(k):
        expected.append(int(np.trace(p)))
        p = p @ a
    assert trace_powers(g, k) == expected


def test_trace_powers_do_not_overflow():
    g = complete(30)
    big = trace_powers(g, 20)[-1]
    # tr(A^k) for K_n is (n-1)^k + (n-1)(-1)^k
    assert big == 29**20 + 29
