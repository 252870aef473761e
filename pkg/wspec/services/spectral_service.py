"""
spectral_service.py
-------------------

Spectral operations on degree-weighted adjacency matrices A_f(G).

A_f(G) has f(d_i, d_j) at (i, j) when ij is an edge and 0 elsewhere. This
module builds it, exposes the full spectrum, the principal eigenpair, the
Rayleigh quotient, equitable partitions with their quotient matrices, and
closed forms for stars, double stars and the three-legged spider T_1.

cross_checked_radius is the entry point the experiments use: it runs both
eigensolvers and refuses to answer when they disagree.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from wspec.config import Config
from wspec.exceptions import (
    InvalidParameterError,
    NonSymmetricError,
    NonUnitVectorError,
    SolverDisagreementError,
)
from wspec.logger import logger
from wspec.models.graph import Graph
from wspec.models.matrix import (
    Partition,
    SpectralResult,
    SymMatrix,
    principal_submatrix,
)
from wspec.models.weight_function import WeightFunction
from wspec.services.eigensolver import (
    jacobi_eigenvalues,
    power_iteration,
    quotient_power_radius,
)

UNIT_TOLERANCE = 1e-9
AGREEMENT_TOLERANCE = 1e-9


def build_weighted_adjacency(g: Graph, f: WeightFunction) -> SymMatrix:
    """
    A_f(G): f(d_u, d_v) at (u, v) and (v, u) for every edge uv.

    Raises:
        WeightFunctionError: f is not positive at a degree pair of g.
    """
    degrees = g.degrees()
    cache: dict[tuple[int, int], float] = {}
    entries = []
    for u, v in g.sorted_edges():
        key = (degrees[u], degrees[v])
        if key not in cache:
            cache[key] = f(*key)
        entries.append((u, v, cache[key]))
    return SymMatrix.from_upper(g.n, entries)


def adjacency_matrix(g: Graph) -> SymMatrix:
    """Ordinary adjacency matrix A(G)."""
    return SymMatrix.from_upper(g.n, ((u, v, 1.0) for u, v in g.sorted_edges()))


def eigen_spectrum(m: SymMatrix) -> list[float]:
    """All eigenvalues of m, descending."""
    return [float(v) for v in jacobi_eigenvalues(m)]


def spectral_radius(m: SymMatrix) -> float:
    """
    max |lambda_i(m)|.

    For a nonnegative matrix this is also the largest eigenvalue.
    """
    spectrum = jacobi_eigenvalues(m)
    radius = float(np.abs(spectrum).max())
    if m.is_nonnegative() and radius - spectrum[0] > 1e-9 * max(1.0, radius):
        raise NonSymmetricError(
            "largest eigenvalue of a nonnegative matrix is not its radius"
        )
    return radius


def principal_eigenvector(m: SymMatrix) -> SpectralResult:
    """
    Perron eigenpair of an irreducible nonnegative matrix.

    Raises:
        ReducibleMatrixError: m comes from a disconnected graph.
    """
    return power_iteration(m)


def rayleigh(m: SymMatrix, x: Sequence[float]) -> float:
    """
    x^T M x for a unit vector x.

    Raises:
        NonUnitVectorError: wrong length or ||x|| differs from 1 by > 1e-9.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (m.order,):
        raise NonUnitVectorError(
            f"vector of shape {x.shape} does not match order {m.order}"
        )
    norm = float(np.linalg.norm(x))
    if abs(norm - 1.0) > UNIT_TOLERANCE:
        raise NonUnitVectorError(f"expected a unit vector, got norm {norm}")
    return float(x @ m.data @ x)


def _as_partition(m: SymMatrix, p) -> Partition:
    if isinstance(p, Partition):
        return Partition.of(p.blocks, m.order)
    return Partition.of(p, m.order)


def _block_row_sums(m: SymMatrix, p: Partition) -> list[list[np.ndarray]]:
    """sums[i][j][r] = row sum of row r of block (i, j)."""
    blocks = [list(b) for b in p.blocks]
    return [
        [m.data[np.ix_(rows, cols)].sum(axis=1) for cols in blocks]
        for rows in blocks
    ]


def is_equitable(m: SymMatrix, p, tol: Optional[float] = None) -> bool:
    """
    True iff every block (i, j) has constant row sums within tol.

    Raises:
        InvalidPartitionError: p is not a partition of 0..n-1.
    """
    partition = _as_partition(m, p)
    tol = Config.EQUITABLE_TOLERANCE if tol is None else tol
    return all(
        float(sums.max() - sums.min()) <= tol
        for row in _block_row_sums(m, partition)
        for sums in row
    )


def quotient_matrix(m: SymMatrix, p) -> np.ndarray:
    """
    Quotient matrix B with b_ij the average row sum of block (i, j).

    The result is square but generally not symmetric.
    """
    partition = _as_partition(m, p)
    return np.array(
        [[float(sums.mean()) for sums in row] for row in _block_row_sums(m, partition)]
    )


def quotient_spectral_radius(q) -> float:
    """Perron root of a nonnegative quotient matrix."""
    return quotient_power_radius(np.asarray(q, dtype=float))


def star_radius_closed_form(n: int, f: WeightFunction) -> float:
    """rho(A_f(S_n)) = f(1, n-1) * sqrt(n-1)."""
    if n < 2:
        raise InvalidParameterError(f"star needs n >= 2, got {n}")
    return f(1, n - 1) * math.sqrt(n - 1)


def double_star_radius_closed_form(d: int, n: int, f: WeightFunction) -> float:
    """
    rho(A_f(S_{d,n-d})), the largest root of
    t^4 - (a+b+c) t^2 + ac with a = (d-1) f(1,d)^2, b = f(d,n-d)^2 and
    c = (n-d-1) f(1,n-d)^2.
    """
    if n < 4 or not 2 <= d <= n - 2:
        raise InvalidParameterError(
            f"double star needs 2 <= d <= n-2, got d={d}, n={n}"
        )
    a = (d - 1) * f(1, d) ** 2
    b = f(d, n - d) ** 2
    c = (n - d - 1) * f(1, n - d) ** 2
    total = a + b + c
    return math.sqrt((total + math.sqrt(total * total - 4.0 * a * c)) / 2.0)


def t1_radius_closed_form(f: WeightFunction) -> float:
    """rho(A_f(T_1)) = sqrt(3 f(2,3)^2 + f(1,2)^2)."""
    return math.sqrt(3.0 * f(2, 3) ** 2 + f(1, 2) ** 2)


def _power_radius(m: SymMatrix) -> float:
    """Power-method radius, run per irreducible block of the support."""
    best = 0.0
    for block in m.support_components():
        sub = m if len(block) == m.order else principal_submatrix(m, block)
        best = max(best, power_iteration(sub).radius)
    return best


def solver_agreement(m: SymMatrix) -> dict:
    """
    Jacobi and power-method radii of m side by side.

    The power radius is None for matrices with negative entries, which
    only the Jacobi solver handles.
    """
    jacobi = spectral_radius(m)
    power = _power_radius(m) if m.is_nonnegative() else None
    difference = None if power is None else abs(jacobi - power)
    return {
        "jacobi": jacobi,
        "power": power,
        "difference": difference,
        "agree": difference is None
        or difference <= AGREEMENT_TOLERANCE * max(1.0, jacobi),
    }


def cross_checked_radius(m: SymMatrix) -> float:
    """
    Spectral radius of a nonnegative symmetric matrix, confirmed by both
    the Jacobi solver and the shifted power method.

    Raises:
        SolverDisagreementError: the two radii differ by more than
            1e-9 * max(1, rho).
    """
    agreement = solver_agreement(m)
    if not agreement["agree"]:
        jacobi, power = agreement["jacobi"], agreement["power"]
        logger.error(
            f"eigensolvers disagree: jacobi={jacobi!r}, power={power!r}, "
            f"order={m.order}"
        )
        raise SolverDisagreementError(
            f"jacobi radius {jacobi!r} and power radius {power!r} disagree"
        )
    return agreement["jacobi"]


def weighted_radius(g: Graph, f: WeightFunction) -> float:
    """rho(A_f(G)), cross-checked."""
    return cross_checked_radius(build_weighted_adjacency(g, f))
