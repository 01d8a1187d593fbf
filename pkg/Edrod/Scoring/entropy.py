"""
Local entropy and Entropy Density Ratio (EDR).

Each sample forms a local group with its K neighbors. Group densities are
normalized in log space (log density minus the group's log-sum-exp), the
Shannon entropy of the normalized densities is taken in nats, and
EDR = entropy / density is carried as log-EDR = ln E - ln density.
"""
import logging
import math

import numpy as np
from scipy.special import logsumexp

from Edrod.Exception.EdrodError import DimensionError
from Edrod.Model.DensityVector import DensityVector
from Edrod.Model.EDRReport import EDRReport
from Edrod.Model.LocalGroup import LocalGroup
from Edrod.Model.NeighborTable import NeighborTable
from Edrod.Utility.Defaults import ENTROPY_FLOOR

logger = logging.getLogger(__name__)


def _check_same_dataset(density: DensityVector, table: NeighborTable) -> None:
    if density.n != table.n:
        raise DimensionError(f"density has {density.n} samples but neighbor table has {table.n}")


def _entropy_terms(probabilities: np.ndarray) -> np.ndarray:
    # 0 * ln 0 = 0 for anything below the floor
    safe = np.maximum(probabilities, ENTROPY_FLOOR)
    return np.where(probabilities < ENTROPY_FLOOR, 0.0, -probabilities * np.log(safe))


def normalize_group(density: DensityVector, table: NeighborTable, i: int) -> LocalGroup:
    _check_same_dataset(density, table)
    if not 0 <= i < table.n:
        raise IndexError(f"sample index {i} out of range for {table.n} samples")
    members = np.concatenate(([i], table.indices[i]))
    logs = density.log_values[members]
    with np.errstate(under="ignore"):
        normalized = np.exp(logs - logsumexp(logs))
    return LocalGroup(center=int(i), members=members, normalized_density=normalized)


def local_entropy(group: LocalGroup) -> float:
    entropy = float(_entropy_terms(group.normalized_density).sum())
    # rounding can push a uniform group a hair past ln(K+1)
    return min(max(entropy, 0.0), math.log(group.k + 1))


def edr_scores(density: DensityVector, table: NeighborTable) -> EDRReport:
    _check_same_dataset(density, table)
    n, k = table.n, table.k
    members = np.column_stack((np.arange(n), table.indices))
    logs = density.log_values[members]
    with np.errstate(under="ignore"):
        normalized = np.exp(logs - logsumexp(logs, axis=1, keepdims=True))
    entropy = np.clip(_entropy_terms(normalized).sum(axis=1), 0.0, math.log(k + 1))

    zero = entropy <= 0.0
    log_edr = np.full(n, -np.inf)
    log_edr[~zero] = np.log(entropy[~zero]) - density.log_values[~zero]
    zero_count = int(zero.sum())
    if zero_count:
        logger.warning("%d sample(s) have zero local entropy; their log-EDR is -inf", zero_count)
    with np.errstate(over="ignore", under="ignore"):
        edr = np.exp(log_edr)
    for array in (entropy, log_edr, edr):
        array.setflags(write=False)
    return EDRReport(entropy=entropy, log_edr=log_edr, edr=edr, k=k, spec=density.spec,
                     zero_entropy_count=zero_count)
