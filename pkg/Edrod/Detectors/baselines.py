"""
Reference detectors: distance-sum KNN, plain KDE and a minimal LOF.

All three return an n-vector where higher means more anomalous. The optional
`workspace` argument lets sweeps reuse cached distance matrices and densities.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from Edrod.Business.Workspace import Workspace
from Edrod.Model.Dataset import Dataset
from Edrod.Model.DetectorSpec import Distance
from Edrod.Model.KernelSpec import KernelSpec, Normalization
from Edrod.Model.NeighborTable import NeighborTable
from Edrod.Neighbors.selection import check_k, select_neighbors

logger = logging.getLogger(__name__)


def _workspace(data: Dataset, workspace: Optional[Workspace]) -> Workspace:
    if workspace is not None and workspace.data is not data:
        raise ValueError("workspace was built for a different dataset")
    return workspace or Workspace(data)


def score_knn_sum(data: Dataset, k: int, distance: Distance = Distance.EUCLIDEAN,
                  workspace: Optional[Workspace] = None) -> np.ndarray:
    """Sum of the distances to the k nearest neighbors."""
    check_k(k, data.n)
    ws = _workspace(data, workspace)
    table = select_neighbors(ws.distances(distance), k, ws.threads)
    return table.distances.sum(axis=1)


def score_kde(data: Dataset, bandwidth: float,
              normalization: Normalization = Normalization.STANDARD_GAUSSIAN,
              workspace: Optional[Workspace] = None) -> np.ndarray:
    """Negated log density."""
    spec = KernelSpec(bandwidth=bandwidth, normalization=normalization)
    return -_workspace(data, workspace).density(spec).log_values


def lof_from_table(table: NeighborTable) -> Tuple[np.ndarray, int]:
    """Local outlier factor from a neighbor table.

    A sample whose neighbors all sit at reachability distance 0 (duplicates)
    has lrd = +inf and scores 1.0. For samples with finite lrd, infinite
    neighbor lrds are capped at the largest finite lrd so their scores stay finite.
    Returns the scores and the number of degenerate neighborhoods.
    """
    k_distance = table.distances[:, -1]
    reach = np.maximum(table.distances, k_distance[table.indices])
    mean_reach = reach.mean(axis=1)
    degenerate = mean_reach == 0.0
    lrd = np.full(table.n, np.inf)
    lrd[~degenerate] = 1.0 / mean_reach[~degenerate]

    if degenerate.any():
        logger.warning("LOF: %d sample(s) have zero reachability (duplicates); using lrd=+inf",
                       int(degenerate.sum()))
    finite = np.isfinite(lrd)
    capped = lrd.copy()
    if finite.any():
        capped[~finite] = lrd[finite].max()

    scores = np.ones(table.n)
    scores[finite] = capped[table.indices[finite]].mean(axis=1) / lrd[finite]
    return scores, int(degenerate.sum())


def score_lof(data: Dataset, k: int, distance: Distance = Distance.EUCLIDEAN,
              workspace: Optional[Workspace] = None) -> np.ndarray:
    check_k(k, data.n)
    ws = _workspace(data, workspace)
    scores, _ = lof_from_table(select_neighbors(ws.distances(distance), k, ws.threads))
    return scores
