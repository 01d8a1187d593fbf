from dataclasses import dataclass

import numpy as np

from Edrod.Model.KernelSpec import KernelSpec

"""Local entropy and Entropy Density Ratio of every sample.

`log_edr` is the ranking channel; `edr` holds linear values and is +inf where
the ratio does not fit a double. Zero-entropy samples carry log_edr = -inf.
"""
@dataclass(frozen=True)
class EDRReport:
    entropy: np.ndarray
    log_edr: np.ndarray
    edr: np.ndarray
    k: int
    spec: KernelSpec
    zero_entropy_count: int = 0
