"""
eigensolver.py
--------------

Numerical kernels behind the spectral service.

    - jacobi_eigenvalues: complete spectrum of a dense symmetric matrix by
      cyclic Jacobi rotations.
    - power_iteration: principal eigenpair of an irreducible nonnegative
      symmetric matrix by power iteration on M + sigma*I, sigma the maximum
      row sum. The shift makes the Perron root strictly dominant even for
      bipartite supports, whose spectra are symmetric about zero.
    - quotient_power_radius: Perron root of a small nonnegative matrix that
      need not be symmetric, bracketed by Collatz-Wielandt bounds.

Every routine works on a private copy of its input.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from wspec.config import Config
from wspec.exceptions import (
    ConvergenceError,
    ReducibleMatrixError,
    SpectralError,
)
from wspec.logger import logger
from wspec.models.matrix import SpectralResult, SymMatrix

JACOBI_TOLERANCE = 1e-13
JACOBI_MAX_SWEEPS = 100
RAYLEIGH_TOLERANCE = 1e-13
RESIDUAL_TOLERANCE = 1e-10
BRACKET_TOLERANCE = 1e-12


def _rotation(app: float, aqq: float, apq: float) -> tuple[float, float]:
    """(c, s) of the rotation annihilating a_pq."""
    h = aqq - app
    if abs(h) + 100.0 * abs(apq) == abs(h):
        # a_pq negligible against the diagonal gap; theta would overflow
        t = apq / h
    else:
        theta = 0.5 * h / apq
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c


def _off_diagonal_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigenvalues(m: SymMatrix) -> np.ndarray:
    """
    All eigenvalues of m in descending order.

    Sweeps every (p, q) pair until the off-diagonal Frobenius norm drops to
    JACOBI_TOLERANCE * ||m||_F.

    Raises:
        ConvergenceError: no convergence within JACOBI_MAX_SWEEPS sweeps.
    """
    a = np.array(m.data, dtype=float)
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if n == 1 or norm == 0.0:
        return np.sort(np.diag(a))[::-1]

    for sweep in range(JACOBI_MAX_SWEEPS):
        off = _off_diagonal_norm(a)
        if off <= JACOBI_TOLERANCE * norm:
            logger.debug(f"jacobi converged: order={n}, sweeps={sweep}")
            return np.sort(np.diag(a))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                c, s = _rotation(a[p, p], a[q, q], apq)
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(
        f"jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (order {n})"
    )


def power_iteration(
    m: SymMatrix, max_iterations: Optional[int] = None
) -> SpectralResult:
    """
    Principal eigenpair of an irreducible nonnegative symmetric matrix.

    Starts from the positive vector 1/sqrt(n) and iterates on M + sigma*I.
    The radius is the Rayleigh quotient of M itself. Stops once successive
    Rayleigh quotients agree to RAYLEIGH_TOLERANCE*max(1, rho) and the
    residual ||Mx - rho x|| is below RESIDUAL_TOLERANCE*max(1, rho).

    Raises:
        SpectralError: m has a negative entry.
        ReducibleMatrixError: the support of m is disconnected.
        ConvergenceError: iteration budget exhausted.
    """
    if not m.is_nonnegative():
        raise SpectralError("power iteration needs a nonnegative matrix")
    n = m.order
    if n == 1:
        return SpectralResult(abs(m.entry(0, 0)), np.ones(1), 0, 0.0)
    if not m.is_irreducible():
        raise ReducibleMatrixError(
            "matrix is reducible (disconnected graph): no positive eigenvector"
        )
    budget = Config.POWER_MAX_ITERATIONS if max_iterations is None else max_iterations

    a = m.data
    sigma = m.max_row_sum()
    x = np.full(n, 1.0 / math.sqrt(n))
    rho_prev = float(x @ (a @ x))
    for iteration in range(1, budget + 1):
        y = a @ x + sigma * x
        x = y / np.linalg.norm(y)
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.linalg.norm(ax - rho * x))
        scale = max(1.0, rho)
        if (
            abs(rho - rho_prev) <= RAYLEIGH_TOLERANCE * scale
            and residual <= RESIDUAL_TOLERANCE * scale
        ):
            logger.debug(
                f"power iteration converged: order={n}, "
                f"iterations={iteration}, residual={residual:.3e}"
            )
            x.setflags(write=False)
            return SpectralResult(rho, x, iteration, residual)
        rho_prev = rho
    raise ConvergenceError(
        f"power iteration did not converge in {budget} iterations (order {n})"
    )


def quotient_power_radius(
    b: np.ndarray, max_iterations: Optional[int] = None
) -> float:
    """
    Perron root of a nonnegative square matrix, not necessarily symmetric.

    Iterates x <- (B + sigma*I)x and stops when the Collatz-Wielandt bracket
    [min (Cx)_i/x_i, max (Cx)_i/x_i] is narrower than
    BRACKET_TOLERANCE*max(1, upper).

    Raises:
        SpectralError: negative entry or non-square input.
        ConvergenceError: iteration budget exhausted.
    """
    b = np.array(b, dtype=float)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise SpectralError(f"expected a square matrix, got {b.shape}")
    if (b < 0).any():
        raise SpectralError("quotient radius needs a nonnegative matrix")
    k = b.shape[0]
    if k == 1:
        return float(b[0, 0])
    budget = Config.POWER_MAX_ITERATIONS if max_iterations is None else max_iterations

    sigma = float(b.sum(axis=1).max())
    c = b + sigma * np.eye(k)
    x = np.ones(k)
    for iteration in range(1, budget + 1):
        y = c @ x
        ratios = y / x
        lower, upper = float(ratios.min()), float(ratios.max())
        if upper - lower <= BRACKET_TOLERANCE * max(1.0, upper):
            logger.debug(
                f"quotient power converged: order={k}, iterations={iteration}"
            )
            return 0.5 * (lower + upper) - sigma
        x = y / y.max()
    raise ConvergenceError(
        f"quotient power method did not converge in {budget} iterations"
    )
