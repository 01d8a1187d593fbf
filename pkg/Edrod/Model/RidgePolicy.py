from dataclasses import dataclass
from typing import Tuple

from Edrod.Utility.Defaults import DEFAULT_RIDGE_LADDER

"""Escalation ladder used when the sample covariance is singular."""
@dataclass(frozen=True)
class RidgePolicy:
    epsilons: Tuple[float, ...] = DEFAULT_RIDGE_LADDER["epsilons"]
    enabled: bool = True
    # max |inverse . covariance_regularized - I| accepted for a factorization
    residual_tolerance: float = DEFAULT_RIDGE_LADDER["residual_tolerance"]

    @classmethod
    def disabled(cls) -> "RidgePolicy":
        return cls(epsilons=(), enabled=False)
