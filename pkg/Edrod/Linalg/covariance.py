"""
Covariance estimation with an escalating ridge for singular data.
"""
import logging
from typing import Optional

import numpy as np

from Edrod.Exception.EdrodError import DegenerateData, DimensionError
from Edrod.Model.CovarianceModel import CovarianceModel
from Edrod.Model.Dataset import Dataset
from Edrod.Model.RidgePolicy import RidgePolicy

logger = logging.getLogger(__name__)


def _accepts(model: CovarianceModel, tolerance: float) -> bool:
    residual = model.inverse @ model.regularized() - np.eye(model.d)
    return bool(np.all(np.isfinite(residual))) and float(np.max(np.abs(residual))) <= tolerance


def _try_factor(covariance: np.ndarray, ridge: float, mean: np.ndarray, tolerance: float) -> Optional[CovarianceModel]:
    try:
        model = CovarianceModel.from_matrix(covariance, ridge_used=ridge, mean=mean)
    except np.linalg.LinAlgError:
        return None
    return model if _accepts(model, tolerance) else None


def fit_covariance(data: Dataset, ridge_policy: Optional[RidgePolicy] = None) -> CovarianceModel:
    """Sample covariance over all rows (denominator n-1) and its inverse.

    When Cholesky fails, or the inverse misses the identity check, the ridge
    eps * tr(S)/d is added for each eps of the policy in turn.
    """
    policy = ridge_policy or RidgePolicy()
    if data.d == 0:
        raise DimensionError("cannot fit a covariance on zero features")
    mean = data.samples.mean(axis=0)
    covariance = np.atleast_2d(np.cov(data.samples, rowvar=False, ddof=1))
    covariance = (covariance + covariance.T) / 2.0
    trace = float(np.trace(covariance))
    if trace <= 0.0:
        raise DegenerateData("all samples are identical; covariance is zero")

    model = _try_factor(covariance, 0.0, mean, policy.residual_tolerance)
    if model is not None:
        logger.info("Covariance fitted without regularization (d=%d)", data.d)
        return model
    if not policy.enabled:
        raise DegenerateData("covariance is singular and ridge regularization is disabled")

    scale = trace / data.d
    for eps in policy.epsilons:
        ridge = eps * scale
        model = _try_factor(covariance, ridge, mean, policy.residual_tolerance)
        if model is not None:
            logger.warning("Covariance is singular; applied ridge %.3e (eps=%g)", ridge, eps)
            return model
    raise DegenerateData(f"covariance stays singular after ridge ladder {policy.epsilons}")
