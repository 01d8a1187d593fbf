from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

"""AUC as a function of one detector parameter ("K" or "h")."""
@dataclass(frozen=True)
class SweepCurve:
    parameter_name: str
    grid: np.ndarray
    auc_values: np.ndarray
    # number of dataset instances averaged into auc_values
    instances: int = 1

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=np.float64)
        aucs = np.asarray(self.auc_values, dtype=np.float64)
        if grid.shape != aucs.shape or grid.ndim != 1 or grid.size == 0:
            raise ValueError("sweep grid and AUC values must be matching non-empty vectors")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("sweep grid must be strictly increasing")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "auc_values", aucs)

    @property
    def spread(self) -> float:
        return float(self.auc_values.max() - self.auc_values.min())

    @property
    def mean_auc(self) -> float:
        return float(self.auc_values.mean())

    def best(self) -> float:
        """Grid value with the highest AUC; ties go to the smallest value."""
        return float(self.grid[int(np.argmax(self.auc_values))])

    def summary(self) -> Dict[str, Any]:
        return {
            "parameter": self.parameter_name,
            "points": int(self.grid.size),
            "spread": self.spread,
            "mean_auc": self.mean_auc,
            "best": self.best(),
            "best_auc": float(self.auc_values.max()),
            "instances": self.instances,
        }
