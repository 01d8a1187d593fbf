from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from Edrod.Exception.EdrodError import DimensionError

"""Dataset covariance and the (possibly ridge-regularized) inverse used by Mahalanobis distance."""
@dataclass(frozen=True)
class CovarianceModel:
    mean: np.ndarray
    covariance: np.ndarray
    inverse: np.ndarray
    ridge_used: float
    # lower Cholesky factor of covariance + ridge_used * I
    cholesky: np.ndarray

    @property
    def d(self) -> int:
        return self.covariance.shape[0]

    def regularized(self) -> np.ndarray:
        return self.covariance + self.ridge_used * np.eye(self.d)

    @classmethod
    def from_matrix(cls, covariance, ridge_used: float = 0.0, mean: Optional[np.ndarray] = None) -> "CovarianceModel":
        """Factor `covariance + ridge_used * I`; raises numpy's LinAlgError when not positive definite."""
        cov = np.atleast_2d(np.asarray(covariance, dtype=np.float64))
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
            raise DimensionError(f"covariance must be square, got shape {cov.shape}")
        d = cov.shape[0]
        cov = (cov + cov.T) / 2.0
        regularized = cov + ridge_used * np.eye(d)
        lower = linalg.cholesky(regularized, lower=True)
        inverse = linalg.cho_solve((lower, True), np.eye(d))
        inverse = (inverse + inverse.T) / 2.0
        center = np.zeros(d) if mean is None else np.asarray(mean, dtype=np.float64)
        for array in (center, cov, inverse, lower):
            array.setflags(write=False)
        return cls(mean=center, covariance=cov, inverse=inverse, ridge_used=float(ridge_used), cholesky=lower)
