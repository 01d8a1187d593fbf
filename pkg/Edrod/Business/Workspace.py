"""
Per-dataset cache of the k-independent structures: covariance, distance
matrices, and density vectors keyed by kernel spec. Sweeps over K (or over
detectors) share one Workspace so nothing O(n^2) is recomputed.
"""
from threading import Lock
from typing import Dict, Optional
import logging

import numpy as np

from Edrod.Density.kde import estimate_density
from Edrod.Linalg.covariance import fit_covariance
from Edrod.Linalg.distance import pairwise_mahalanobis, pairwise_sq_euclidean
from Edrod.Model.CovarianceModel import CovarianceModel
from Edrod.Model.Dataset import Dataset
from Edrod.Model.DensityVector import DensityVector
from Edrod.Model.DetectorSpec import Distance
from Edrod.Model.KernelSpec import KernelSpec
from Edrod.Model.RidgePolicy import RidgePolicy

logger = logging.getLogger(__name__)


class Workspace:
    def __init__(self, data: Dataset, threads: int = 1, ridge_policy: Optional[RidgePolicy] = None):
        self.data = data
        self.threads = threads
        self.ridge_policy = ridge_policy or RidgePolicy()
        self._covariance: Optional[CovarianceModel] = None
        self._sq_euclidean: Optional[np.ndarray] = None
        self._distances: Dict[Distance, np.ndarray] = {}
        self._densities: Dict[KernelSpec, DensityVector] = {}
        self._lock = Lock()

    def covariance(self) -> CovarianceModel:
        with self._lock:
            if self._covariance is None:
                self._covariance = fit_covariance(self.data, self.ridge_policy)
            return self._covariance

    def _squared_euclidean(self) -> np.ndarray:
        # caller holds the lock
        if self._sq_euclidean is None:
            self._sq_euclidean = pairwise_sq_euclidean(self.data.samples, self.threads)
            self._sq_euclidean.setflags(write=False)
        return self._sq_euclidean

    def distances(self, distance: Distance) -> np.ndarray:
        distance = Distance(distance)
        if distance is Distance.MAHALANOBIS:
            model = self.covariance()
        with self._lock:
            if distance not in self._distances:
                if distance is Distance.MAHALANOBIS:
                    matrix = pairwise_mahalanobis(self.data, model, self.threads)
                else:
                    matrix = np.sqrt(self._squared_euclidean())
                matrix.setflags(write=False)
                self._distances[distance] = matrix
            return self._distances[distance]

    def density(self, spec: KernelSpec) -> DensityVector:
        with self._lock:
            if spec not in self._densities:
                self._densities[spec] = estimate_density(
                    self.data, spec, self.threads, sq_distances=self._squared_euclidean()
                )
            return self._densities[spec]

    def ridge_used(self) -> Optional[float]:
        return None if self._covariance is None else self._covariance.ridge_used
