from dataclasses import dataclass

import numpy as np

"""K nearest neighbors of every sample, ascending by distance then by index."""
@dataclass(frozen=True)
class NeighborTable:
    k: int
    indices: np.ndarray
    distances: np.ndarray
    tie_events: int

    @property
    def n(self) -> int:
        return self.indices.shape[0]
