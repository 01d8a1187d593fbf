"""
K-nearest-neighbor selection on a dense distance matrix.

Rows are processed in blocks with a partial selection (argpartition); rows
whose k-th and (k+1)-th distances tie are redone exactly so the boundary
always goes to the lower sample index.
"""
import logging

import numpy as np

from Edrod.Exception.EdrodError import DimensionError, KInvalid, KTooLarge
from Edrod.Model.NeighborTable import NeighborTable
from Edrod.Utility.parallel import row_blocks, run_blocks

logger = logging.getLogger(__name__)


def check_k(k: int, n: int) -> None:
    if k < 1:
        raise KInvalid(f"k must be at least 1, got {k}", location="k")
    if k >= n:
        raise KTooLarge(f"k must be below the sample count {n}, got {k}", location="k")


def _select_row_exact(row: np.ndarray, k: int) -> np.ndarray:
    threshold = np.partition(row, k - 1)[k - 1]
    below = np.flatnonzero(row < threshold)
    at = np.flatnonzero(row == threshold)
    return np.concatenate((below, at[: k - below.size]))


def select_neighbors(distance_matrix: np.ndarray, k: int, threads: int = 1) -> NeighborTable:
    matrix = np.asarray(distance_matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError(f"distance matrix must be square, got shape {matrix.shape}")
    n = matrix.shape[0]
    check_k(k, n)

    indices = np.empty((n, k), dtype=np.int64)
    distances = np.empty((n, k), dtype=np.float64)
    ties = np.zeros(n, dtype=bool)

    def work(start: int, stop: int) -> None:
        block = matrix[start:stop].copy()
        rows = np.arange(stop - start)
        block[rows, rows + start] = np.inf
        chosen = np.argpartition(block, k - 1, axis=1)[:, :k]
        kth = np.take_along_axis(block, chosen, axis=1).max(axis=1)
        if k < n - 1:
            # more than k candidates within the k-th distance: boundary tie
            tied = (block <= kth[:, None]).sum(axis=1) > k
            for r in np.flatnonzero(tied):
                chosen[r] = _select_row_exact(block[r], k)
            ties[start:stop] = tied
        chosen_dist = np.take_along_axis(block, chosen, axis=1)
        order = np.lexsort((chosen, chosen_dist), axis=-1)
        indices[start:stop] = np.take_along_axis(chosen, order, axis=1)
        distances[start:stop] = np.take_along_axis(chosen_dist, order, axis=1)

    run_blocks(work, row_blocks(n, n), threads)
    tie_events = int(ties.sum())
    if tie_events:
        logger.warning("%d row(s) had tied distances at the k=%d boundary; lower index kept", tie_events, k)
    indices.setflags(write=False)
    distances.setflags(write=False)
    return NeighborTable(k=k, indices=indices, distances=distances, tie_events=tie_events)
