from dataclasses import dataclass

import numpy as np

"""A sample plus its K neighbors, with group-normalized densities (members[0] is the center)."""
@dataclass(frozen=True)
class LocalGroup:
    center: int
    members: np.ndarray
    normalized_density: np.ndarray

    @property
    def k(self) -> int:
        return len(self.members) - 1
