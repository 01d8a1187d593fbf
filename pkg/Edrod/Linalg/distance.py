"""
Mahalanobis and Euclidean distances, scalar and dense pairwise.

Pairwise matrices are computed in row blocks; each entry sums its d squared
differences in a fixed order, the diagonal is set to exactly 0 and the upper
triangle is mirrored so symmetry is bit-exact.
"""
import logging

import numpy as np
from scipy import linalg

from Edrod.Exception.EdrodError import DimensionError
from Edrod.Model.CovarianceModel import CovarianceModel
from Edrod.Model.Dataset import Dataset
from Edrod.Utility.parallel import row_blocks, run_blocks

logger = logging.getLogger(__name__)


def mahalanobis(a, b, model: CovarianceModel) -> float:
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.shape != b.shape or a.shape[0] != model.d:
        raise DimensionError(f"vectors of length {a.shape[0]} and {b.shape[0]} do not match model dimension {model.d}")
    diff = a - b
    quad = float(diff @ model.inverse @ diff)
    return float(np.sqrt(max(quad, 0.0)))


def whiten(data: Dataset, model: CovarianceModel) -> np.ndarray:
    """Map samples to y = L^-1 x, so ||y_i - y_j|| is the Mahalanobis distance."""
    if data.d != model.d:
        raise DimensionError(f"dataset has {data.d} features, covariance model has {model.d}")
    return linalg.solve_triangular(model.cholesky, data.samples.T, lower=True).T


def pairwise_sq_euclidean(points: np.ndarray, threads: int = 1) -> np.ndarray:
    points = np.ascontiguousarray(points, dtype=np.float64)
    n, d = points.shape
    out = np.empty((n, n), dtype=np.float64)

    def work(start: int, stop: int) -> None:
        diff = points[start:stop, None, :] - points[None, :, :]
        out[start:stop] = (diff * diff).sum(axis=-1)

    run_blocks(work, row_blocks(n, n * d), threads)
    np.fill_diagonal(out, 0.0)
    for i in range(n - 1):
        out[i + 1:, i] = out[i, i + 1:]
    return out


def pairwise_euclidean(points: np.ndarray, threads: int = 1) -> np.ndarray:
    return np.sqrt(pairwise_sq_euclidean(points, threads))


def pairwise_mahalanobis(data: Dataset, model: CovarianceModel, threads: int = 1) -> np.ndarray:
    logger.info("Computing %dx%d Mahalanobis distance matrix", data.n, data.n)
    return pairwise_euclidean(whiten(data, model), threads)
