"""
Global Gaussian kernel density estimation.

For every sample the density sums a Euclidean Gaussian kernel over all other
samples (the self term is left out) and divides by n * h^d. The sum is
accumulated as a max-shifted log-sum-exp so high d or small h cannot
underflow; `DensityVector.log_values` is what downstream code reads.
"""
import logging
import math
from typing import Optional

import numpy as np
from scipy.special import logsumexp
from scipy.stats import rankdata

from Edrod.Exception.EdrodError import DimensionError, InsufficientData
from Edrod.Linalg.distance import pairwise_sq_euclidean
from Edrod.Model.Dataset import Dataset
from Edrod.Model.DensityVector import DensityVector
from Edrod.Model.KernelSpec import KernelSpec
from Edrod.Utility.parallel import row_blocks, run_blocks

logger = logging.getLogger(__name__)


def estimate_density(data: Dataset, spec: KernelSpec, threads: int = 1,
                     sq_distances: Optional[np.ndarray] = None) -> DensityVector:
    """Density of every sample; `sq_distances` lets callers reuse a squared Euclidean matrix."""
    n, d = data.n, data.d
    if n < 2:
        raise InsufficientData(f"density estimation needs at least 2 samples, got {n}")
    if sq_distances is None:
        sq_distances = pairwise_sq_euclidean(data.samples, threads)
    elif sq_distances.shape != (n, n):
        raise DimensionError(f"squared distance matrix must be {n}x{n}, got {sq_distances.shape}")

    h = spec.bandwidth
    log_prefactor = spec.log_constant(d) - math.log(n) - d * math.log(h)
    inv_two_h2 = 1.0 / (2.0 * h * h)
    log_sums = np.empty(n, dtype=np.float64)

    def work(start: int, stop: int) -> None:
        exponents = -sq_distances[start:stop] * inv_two_h2
        rows = np.arange(stop - start)
        exponents[rows, rows + start] = -np.inf
        log_sums[start:stop] = logsumexp(exponents, axis=1)

    run_blocks(work, row_blocks(n, n), threads)
    logger.info("Estimated KDE density for %d samples (h=%g, %s)", n, h, spec.normalization.value)
    return DensityVector.from_log(log_prefactor + log_sums, spec)


def density_rank(density: DensityVector) -> np.ndarray:
    """Ascending ranks, lowest density = 1, average ranks on ties."""
    return rankdata(density.log_values, method="average")
