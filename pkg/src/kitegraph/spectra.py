"""Floating-point spectra of the adjacency, Laplacian and signless Laplacian matrices.

Eigenvalues come from LAPACK's symmetric solver (Householder reduction to
tridiagonal form, then implicit QL/QR).  Every report carries an a
posteriori error bound from eigenpair residuals.

Floats are never used to decide multiplicities or cospectrality; strict
inequalities are backed by the exact certificates in :mod:`kitegraph.exact`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact import MatrixKind, graph_matrix
from .graph import Graph, GraphError

TOL = 1e-9
TARGET_ACCURACY = 1e-10


@dataclass(frozen=True)
class SpectrumReport:
    kind: MatrixKind
    values: tuple[float, ...]
    err_bound: float

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]


def eigenvalues(g: Graph, kind: MatrixKind | str = MatrixKind.ADJACENCY) -> SpectrumReport:
    """All eigenvalues of the chosen matrix, sorted descending."""
    kind = MatrixKind.parse(kind)
    if g.n < 1:
        raise GraphError("eigenvalues need n >= 1")
    a = graph_matrix(g, kind).astype(float)
    w, v = np.linalg.eigh(a)
    # Each unit residual r bounds |w_i - true eigenvalue| by ||r||_2 for symmetric a.
    resid = np.linalg.norm(a @ v - v * w, axis=0)
    norm = float(np.abs(a).sum(axis=1).max(initial=0.0))
    bound = float(resid.max(initial=0.0)) + g.n * np.finfo(float).eps * max(norm, 1.0)
    return SpectrumReport(kind, tuple(float(x) for x in w[::-1]), bound)


def spectral_radius(g: Graph) -> float:
    return eigenvalues(g).largest


def second_largest(g: Graph) -> float:
    if g.n < 2:
        raise GraphError("second largest eigenvalue needs n >= 2")
    return eigenvalues(g).values[1]


def least_eigenvalue(g: Graph) -> float:
    return eigenvalues(g).smallest


@dataclass(frozen=True)
class InterlacingResult:
    holds: bool
    first_violation: int | None  # 1-based index i, None when all hold

    def __bool__(self) -> bool:
        return self.holds


def check_interlacing(g: Graph, h: Graph, embedding: Sequence[int], tol: float = TOL) -> InterlacingResult:
    """Check ``lambda_i(G) >= lambda_i(H) >= lambda_{n-m+i}(G)`` for ``i = 1..m``.

    ``embedding[j]`` is the vertex of ``g`` playing vertex ``j`` of ``h``;
    ``h`` must be exactly the subgraph of ``g`` induced on it.
    """
    if len(embedding) != h.n:
        raise GraphError(f"embedding has {len(embedding)} vertices, pattern has {h.n}")
    if g.induced(list(embedding)) != h:
        raise GraphError("the embedding does not induce h in g")
    n, m = g.n, h.n
    lg = eigenvalues(g).values
    lh = eigenvalues(h).values if m else ()
    for i in range(m):
        if lg[i] < lh[i] - tol or lh[i] < lg[n - m + i] - tol:
            return InterlacingResult(False, i + 1)
    return InterlacingResult(True, None)


def path_eigenvalues(n: int) -> np.ndarray:
    """Closed form ``2 cos(pi j / (n + 1))``, ``j = 1..n`` (already descending)."""
    j = np.arange(1, n + 1)
    return 2 * np.cos(np.pi * j / (n + 1))


def cycle_eigenvalues(n: int) -> np.ndarray:
    """Closed form ``2 cos(2 pi j / n)``, sorted descending."""
    return np.sort(2 * np.cos(2 * np.pi * np.arange(n) / n))[::-1]
