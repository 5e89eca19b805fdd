"""Minimum-cost perfect matching on square integer matrices (Hungarian method)."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

__all__ = ["Assignment", "AssignmentError", "min_cost_perfect_matching"]

logger = logging.getLogger(__name__)

_INF = np.iinfo(np.int64).max // 4


class AssignmentError(RuntimeError):
    """Raised when a weight matrix cannot be assigned."""


@dataclass(frozen=True, slots=True)
class Assignment:
    """Row-to-column pairing and its total weight."""

    pairs: tuple[tuple[int, int], ...]
    total: int

    def column_of(self, row: int) -> int:
        return self.pairs[row][1]


def min_cost_perfect_matching(
    weights: Sequence[Sequence[int]] | npt.NDArray[np.int64],
) -> Assignment:
    """Return a perfect matching of minimum total weight.

    Potentials version of the Hungarian method, O(n^3). The scan over free
    columns is vectorized; rows are added one at a time.
    """

    matrix = np.asarray(weights, dtype=np.int64)
    if matrix.size == 0:
        return Assignment(pairs=(), total=0)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        msg = f"Ağırlık matrisi kare olmalı, alınan boyut: {matrix.shape}"
        raise AssignmentError(msg)

    n = matrix.shape[0]
    u = np.zeros(n + 1, dtype=np.int64)
    v = np.zeros(n + 1, dtype=np.int64)
    # p[j]: row (1-based) matched to column j; p[0] holds the row being inserted
    p = np.zeros(n + 1, dtype=np.int64)
    way = np.zeros(n + 1, dtype=np.int64)

    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(n + 1, _INF, dtype=np.int64)
        used = np.zeros(n + 1, dtype=bool)

        while True:
            used[j0] = True
            i0 = int(p[j0])
            free = ~used[1:]

            reduced = matrix[i0 - 1] - u[i0] - v[1:]
            improve = free & (reduced < minv[1:])
            minv[1:][improve] = reduced[improve]
            way[1:][improve] = j0

            candidates = np.where(free, minv[1:], _INF)
            j1 = int(np.argmin(candidates)) + 1
            delta = int(candidates[j1 - 1])

            used_columns = np.flatnonzero(used)
            u[p[used_columns]] += delta
            v[used_columns] -= delta
            minv[1:][free] -= delta

            j0 = j1
            if p[j0] == 0:
                break

        while j0:
            j1 = int(way[j0])
            p[j0] = p[j1]
            j0 = j1

    column_for_row = [0] * n
    for column in range(1, n + 1):
        column_for_row[int(p[column]) - 1] = column - 1

    pairs = tuple((row, column) for row, column in enumerate(column_for_row))
    total = int(sum(int(matrix[row, column]) for row, column in pairs))
    logger.debug("Atama çözüldü: n=%d toplam=%d", n, total)
    return Assignment(pairs=pairs, total=total)
