from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from Edrod.Exception.EdrodError import BandwidthError


class Kernel(str, Enum):
    GAUSSIAN = "gaussian"


class Normalization(str, Enum):
    # (2*pi)^(-d), the literal kernel constant; ranks match STANDARD_GAUSSIAN
    FULL_POWER = "paper"
    # (2*pi)^(-d/2), the standard Gaussian constant
    STANDARD_GAUSSIAN = "standard"


"""Kernel width, kernel family and normalization constant convention."""
@dataclass(frozen=True)
class KernelSpec:
    bandwidth: float = 1.0
    kernel: Kernel = Kernel.GAUSSIAN
    normalization: Normalization = Normalization.STANDARD_GAUSSIAN

    def __post_init__(self):
        h = self.bandwidth
        if isinstance(h, bool) or not isinstance(h, (int, float, np.floating, np.integer)):
            raise BandwidthError(f"bandwidth must be a real number, got {h!r}", location="h")
        if not math.isfinite(h) or h <= 0:
            raise BandwidthError(f"bandwidth must be positive and finite, got {h}", location="h")
        object.__setattr__(self, "bandwidth", float(h))
        object.__setattr__(self, "kernel", Kernel(self.kernel))
        object.__setattr__(self, "normalization", Normalization(self.normalization))

    def log_constant(self, d: int) -> float:
        """Natural log of the kernel's normalization constant C in dimension d."""
        if self.normalization is Normalization.FULL_POWER:
            return -d * math.log(2.0 * math.pi)
        return -0.5 * d * math.log(2.0 * math.pi)
