from dataclasses import dataclass
import math

import numpy as np

from Edrod.Model.KernelSpec import KernelSpec

"""Per-sample global KDE density; `log_values` is the authoritative channel."""
@dataclass(frozen=True)
class DensityVector:
    values: np.ndarray
    log_values: np.ndarray
    spec: KernelSpec

    @classmethod
    def from_log(cls, log_values: np.ndarray, spec: KernelSpec) -> "DensityVector":
        logs = np.array(log_values, dtype=np.float64, copy=True)
        # may underflow to 0 at high d / small h; consumers read log_values
        with np.errstate(under="ignore"):
            values = np.exp(logs)
        logs.setflags(write=False)
        values.setflags(write=False)
        return cls(values=values, log_values=logs, spec=spec)

    @property
    def n(self) -> int:
        return self.log_values.shape[0]

    def scaled(self, factor: float) -> "DensityVector":
        """Same densities multiplied by a positive constant (shifted in log space)."""
        if not factor > 0:
            raise ValueError(f"scale factor must be positive, got {factor}")
        return DensityVector.from_log(self.log_values + math.log(factor), self.spec)
