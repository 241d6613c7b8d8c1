"""Exact characteristic polynomials, discriminants and eigenvalue-bound certificates.

Nothing here rounds.  Characteristic polynomials come from Berkowitz's
division-free algorithm over Python integers; bound certificates decide
(semi)definiteness of an integer matrix by fraction-free elimination.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError
from .poly import IntPoly
from .transforms import line_graph, subdivision

CHARPOLY_MAX_N = 64


class MatrixKind(str, enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless_laplacian"

    @classmethod
    def parse(cls, text: str | MatrixKind) -> MatrixKind:
        if isinstance(text, cls):
            return text
        aliases = {"a": "adjacency", "adj": "adjacency", "l": "laplacian", "lap": "laplacian",
                   "q": "signless_laplacian", "signless": "signless_laplacian"}
        key = str(text).strip().lower().replace("-", "_")
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown matrix kind {text!r}") from None


def matrix_rows(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> list[list[int]]:
    """The chosen graph matrix as nested lists of Python ints."""
    kind = MatrixKind.parse(kind)
    rows = [[(mask >> u) & 1 for u in range(g.n)] for mask in g.masks]
    if kind is MatrixKind.ADJACENCY:
        return rows
    sign = -1 if kind is MatrixKind.LAPLACIAN else 1
    for v, row in enumerate(rows):
        deg = sum(row)
        for u in range(g.n):
            row[u] *= sign
        row[v] = deg
    return rows


def graph_matrix(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> np.ndarray:
    return np.array(matrix_rows(g, kind), dtype=np.int64).reshape(g.n, g.n)


def berkowitz(rows: Sequence[Sequence[int]]) -> IntPoly:
    """``det(xI - M)`` for a square integer matrix, division-free."""
    n = len(rows)
    if n == 0:
        return IntPoly((1,))
    # v holds coefficients in descending degree
    v = [1, -rows[0][0]]
    for r in range(1, n):
        sub = [list(rows[i][:r]) for i in range(r)]
        row = rows[r][:r]
        x = [rows[i][r] for i in range(r)]
        col = [1, -rows[r][r]]
        for _ in range(r):
            col.append(-sum(a * b for a, b in zip(row, x)))
            x = [sum(a * b for a, b in zip(srow, x)) for srow in sub]
        v = [sum(col[i - j] * v[j] for j in range(min(i, len(v) - 1) + 1)) for i in range(r + 2)]
    return IntPoly(reversed(v))


def charpoly(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> IntPoly:
    """Characteristic polynomial ``det(xI - M)`` of A, L = D - A or Q = D + A."""
    if g.n > CHARPOLY_MAX_N:
        raise GraphError(f"exact charpoly is capped at n={CHARPOLY_MAX_N}, got {g.n}")
    return berkowitz(matrix_rows(g, kind))


def charpoly_pendant_recurrence(g: Graph, x1: int) -> IntPoly:
    """``P(G) = x P(G - x1) - P(G - x1 - x2)`` for a pendant vertex ``x1``."""
    if not 0 <= x1 < g.n or g.degree(x1) != 1:
        raise GraphError(f"vertex {x1} is not a pendant vertex")
    x2 = g.neighbors(x1)[0]
    g1 = g.induced([v for v in range(g.n) if v != x1])
    g2 = g.induced([v for v in range(g.n) if v not in (x1, x2)])
    return IntPoly.x() * charpoly(g1) - charpoly(g2)


def discriminant(g: Graph) -> int:
    """Product of ``(lambda_i + 2)`` over the adjacency spectrum, as ``(-1)^n P_A(-2)``."""
    value = charpoly(g)(-2)
    return -value if g.n % 2 else value


def batch_charpolys(masks: Sequence[Sequence[int]], n: int, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> np.ndarray:
    """Characteristic polynomials of many same-order graphs at once.

    Faddeev-LeVerrier over int64: ``M_k = A M_{k-1} + c I`` and
    ``c = -tr(A M_k) / k``.  Every division is exact and asserted; a
    magnitude guard keeps products below 2**62.  Returns an array of shape
    ``(len(masks), n + 1)`` with ascending coefficients.
    """
    kind = MatrixKind.parse(kind)
    count = len(masks)
    out = np.zeros((count, n + 1), dtype=np.int64)
    out[:, n] = 1
    if count == 0 or n == 0:
        return out
    m = np.asarray(masks, dtype=np.int64).reshape(count, n)
    a = (m[:, :, None] >> np.arange(n)[None, None, :]) & 1
    if kind is not MatrixKind.ADJACENCY:
        deg = a.sum(axis=2)
        if kind is MatrixKind.LAPLACIAN:
            a = -a
        a = a + deg[:, :, None] * np.eye(n, dtype=np.int64)[None]
    bound_a = int(np.abs(a).max(initial=0))
    eye = np.eye(n, dtype=np.int64)[None]
    mk = np.zeros_like(a)
    c = np.ones(count, dtype=np.int64)
    for k in range(1, n + 1):
        mk = mk + c[:, None, None] * eye
        if int(np.abs(mk).max()) * bound_a * n >= 2**62:
            raise OverflowError("int64 guard tripped in batch_charpolys; use charpoly() instead")
        mk = a @ mk
        tr = np.trace(mk, axis1=1, axis2=2)
        if np.any(tr % k):
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c = -(tr // k)
        out[:, n - k] = c
    return out


# ---------------------------------------------------------------- identities


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: IntPoly
    rhs: IntPoly

    def __bool__(self) -> bool:
        return self.holds


def verify_line_identity(g: Graph) -> IdentityCheck:
    """``P_A(L(G))(x) (x+2)^(n-m) = P_Q(G)(x+2)``, arranged so no negative powers occur."""
    pl = charpoly(line_graph(g))
    pq = charpoly(g, MatrixKind.SIGNLESS_LAPLACIAN).shift(2)
    d = g.m - g.n
    x2 = IntPoly((2, 1))
    if d >= 0:
        lhs, rhs = pl, x2**d * pq
    else:
        lhs, rhs = x2**-d * pl, pq
    return IdentityCheck(lhs == rhs, lhs, rhs)


def verify_subdivision_identity(g: Graph) -> IdentityCheck:
    """``P_A(S(G))(x) = x^(m-n) P_Q(G)(x^2)``, arranged like the line identity."""
    ps = charpoly(subdivision(g))
    pq = charpoly(g, MatrixKind.SIGNLESS_LAPLACIAN).compose(IntPoly((0, 0, 1)))
    d = g.m - g.n
    x = IntPoly.x()
    if d >= 0:
        lhs, rhs = ps, x**d * pq
    else:
        lhs, rhs = x**-d * ps, pq
    return IdentityCheck(lhs == rhs, lhs, rhs)


# ------------------------------------------------------------ certificates


@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact eigenvalue-bound test.

    ``pivots`` are the fraction-free elimination pivots whose signs decide
    the claim (skipped zero rows are recorded as 0).
    """

    proved: bool
    claim: str
    pivots: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.proved

    @property
    def verdict(self) -> str:
        return "proved" if self.proved else "refuted"


def is_positive_semidefinite(rows: Sequence[Sequence[int]], strict: bool = False) -> tuple[bool, tuple[int, ...]]:
    """Exact (semi)definiteness of a symmetric integer matrix.

    Bareiss elimination on the diagonal: every pivot is a principal minor
    of the pivot set chosen so far.  A negative pivot refutes; a zero pivot
    refutes definiteness, and refutes semidefiniteness unless its whole
    remaining row is zero, in which case the index is dropped.
    """
    a = [list(map(int, r)) for r in rows]
    active = list(range(len(a)))
    prev = 1
    pivots = []
    while active:
        k = active.pop(0)
        piv = a[k][k]
        pivots.append(piv)
        if piv < 0 or (strict and piv == 0):
            return False, tuple(pivots)
        if piv == 0:
            if any(a[k][j] for j in active):
                return False, tuple(pivots)
            continue
        rk = a[k]
        for i in active:
            ri = a[i]
            aik = ri[k]
            for j in active:
                num = piv * ri[j] - aik * rk[j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                ri[j] = q
        prev = piv
    return True, tuple(pivots)


def _as_fraction(bound) -> Fraction:
    return bound if isinstance(bound, Fraction) else Fraction(bound)


def certify_rho_le(g: Graph, bound, strict: bool = False) -> Certificate:
    """Decide ``lambda_1 <= bound`` (``<`` if strict) via ``q (bound I - A)`` with ``bound = p/q``."""
    b = _as_fraction(bound)
    p, q = b.numerator, b.denominator
    rows = [[(p if i == j else 0) - q * a for j, a in enumerate(row)] for i, row in enumerate(matrix_rows(g))]
    ok, piv = is_positive_semidefinite(rows, strict)
    return Certificate(ok, f"lambda_1 {'<' if strict else '<='} {b}", piv)


def certify_lambda_min_ge(g: Graph, bound, strict: bool = False) -> Certificate:
    """Decide ``lambda_n >= bound`` (``>`` if strict) via ``q (A - bound I)``."""
    b = _as_fraction(bound)
    p, q = b.numerator, b.denominator
    rows = [[q * a - (p if i == j else 0) for j, a in enumerate(row)] for i, row in enumerate(matrix_rows(g))]
    ok, piv = is_positive_semidefinite(rows, strict)
    return Certificate(ok, f"lambda_n {'>' if strict else '>='} {b}", piv)


def inertia(rows: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` eigenvalue counts of a symmetric rational matrix.

    Symmetric elimination with 1x1 pivots where a diagonal entry is
    nonzero and a 2x2 block ``[[0, b], [b, 0]]`` otherwise; congruence
    preserves inertia.
    """
    a = [[Fraction(x) for x in r] for r in rows]
    active = list(range(len(a)))
    pos = neg = 0
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is not None:
            piv = a[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            for i in active:
                f = a[i][k] / piv
                if f:
                    for j in active:
                        a[i][j] -= f * a[k][j]
            continue
        pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = a[i0][j0]
        # [[0, b], [b, 0]] has one positive and one negative eigenvalue
        pos += 1
        neg += 1
        active.remove(i0)
        active.remove(j0)
        for i in active:
            ci, cj = a[i][i0], a[i][j0]
            if not (ci or cj):
                continue
            # block inverse is [[0, 1/b], [1/b, 0]]
            for j in active:
                a[i][j] -= (ci * a[j0][j] + cj * a[i0][j]) / b
    return pos, neg, len(a) - pos - neg


def count_eigenvalues_ge(g: Graph, bound) -> int:
    """Exact number of adjacency eigenvalues ``>= bound``."""
    b = _as_fraction(bound)
    rows = [[b * (1 if i == j else 0) - a for j, a in enumerate(row)] for i, row in enumerate(matrix_rows(g))]
    _, neg, zero = inertia(rows)
    return neg + zero


def trace_powers(g: Graph, k_max: int) -> list[int]:
    """``[tr(A), tr(A^2), ..., tr(A^k_max)]`` in exact integers."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    a = graph_matrix(g)
    if g.n and float(max(g.max_degree(), 1)) ** k_max * g.n >= 2.0**62:
        a = a.astype(object)
    out = []
    p = a.copy()
    for k in range(1, k_max + 1):
        out.append(int(np.trace(p)) if g.n else 0)
        if k < k_max:
            p = p @ a
    return out
