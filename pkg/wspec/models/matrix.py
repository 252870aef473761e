"""
matrix.py
---------

Dense real symmetric matrices, vertex partitions and eigensolver results.

SymMatrix wraps a read-only numpy array whose symmetry is exact: every
constructor writes entry (i, j) and (j, i) from the same value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from wspec.config import Config
from wspec.exceptions import (
    InvalidParameterError,
    InvalidPartitionError,
    NonSymmetricError,
)


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Immutable dense symmetric matrix."""

    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        array = np.array(self.data, dtype=float, copy=True)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise NonSymmetricError(f"expected a square matrix, got {array.shape}")
        if array.shape[0] < 1:
            raise InvalidParameterError("matrix order must be >= 1")
        if array.shape[0] > Config.MAX_MATRIX_ORDER:
            raise InvalidParameterError(
                f"matrix order {array.shape[0]} exceeds {Config.MAX_MATRIX_ORDER}"
            )
        if not np.array_equal(array, array.T):
            raise NonSymmetricError("matrix is not exactly symmetric")
        array.setflags(write=False)
        object.__setattr__(self, "data", array)

    @classmethod
    def from_upper(cls, order: int, entries: Iterable[tuple[int, int, float]]):
        """Build from (i, j, value) triples, writing both (i, j) and (j, i)."""
        array = np.zeros((order, order))
        for i, j, value in entries:
            array[i, j] = value
            array[j, i] = value
        return cls(array)

    @property
    def order(self) -> int:
        return self.data.shape[0]

    def entry(self, i: int, j: int) -> float:
        return float(self.data[i, j])

    def is_nonnegative(self) -> bool:
        return bool((self.data >= 0).all())

    def max_row_sum(self) -> float:
        return float(np.abs(self.data).sum(axis=1).max())

    def support_components(self) -> list[list[int]]:
        """Connected components of the graph of nonzero off-diagonal entries."""
        n = self.order
        seen = [False] * n
        blocks = []
        for start in range(n):
            if seen[start]:
                continue
            seen[start] = True
            block = [start]
            for u in block:
                for w in np.flatnonzero(self.data[u]):
                    w = int(w)
                    if w != u and not seen[w]:
                        seen[w] = True
                        block.append(w)
            blocks.append(sorted(block))
        return blocks

    def is_irreducible(self) -> bool:
        return len(self.support_components()) == 1

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return np.array_equal(self.data, other.data)

    __hash__ = None


def principal_submatrix(m: SymMatrix, indices: Sequence[int]) -> SymMatrix:
    """Rows and columns of m restricted to indices (kept in the given order)."""
    idx = list(indices)
    if not idx or len(set(idx)) != len(idx):
        raise InvalidParameterError("indices must be nonempty and distinct")
    if min(idx) < 0 or max(idx) >= m.order:
        raise InvalidParameterError(f"indices out of range 0..{m.order - 1}")
    return SymMatrix(m.data[np.ix_(idx, idx)])


def with_symmetric_increment(
    m: SymMatrix, i: int, j: int, amount: float
) -> SymMatrix:
    """Copy of m with amount added to both (i, j) and (j, i)."""
    if not (0 <= i < m.order and 0 <= j < m.order):
        raise InvalidParameterError(f"({i}, {j}) out of range for order {m.order}")
    array = np.array(m.data)
    array[i, j] += amount
    if i != j:
        array[j, i] = array[i, j]
    return SymMatrix(array)


def dump_matrix(m: SymMatrix) -> str:
    """Debug dump: order, then one line of 17-significant-digit values per row."""
    lines = [str(m.order)]
    lines += [" ".join(f"{v:.17g}" for v in row) for row in m.data]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Partition:
    """Ordered blocks of vertex indices covering 0..n-1."""

    blocks: tuple

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], order: int) -> "Partition":
        """
        Validate and build a partition of 0..order-1.

        Raises:
            InvalidPartitionError: empty block, overlap, or missing vertex.
        """
        normalized = tuple(tuple(int(v) for v in b) for b in blocks)
        if not normalized or any(not b for b in normalized):
            raise InvalidPartitionError("partition blocks must be nonempty")
        flat = [v for b in normalized for v in b]
        if len(flat) != len(set(flat)):
            raise InvalidPartitionError("partition blocks overlap")
        if sorted(flat) != list(range(order)):
            raise InvalidPartitionError(
                f"partition does not cover exactly 0..{order - 1}"
            )
        return cls(normalized)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class SpectralResult:
    """Principal eigenpair with convergence metadata."""

    radius: float
    eigenvector: np.ndarray = field(repr=False, compare=False)
    iterations: int = 0
    residual: float = 0.0
