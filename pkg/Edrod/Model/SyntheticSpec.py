from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class SyntheticKind(str, Enum):
    TWO_DIM_MIXED = "2d"
    TEN_DIM_GAUSSIAN = "10d"


"""Recipe for a seeded look-alike benchmark dataset.

`geometry` carries the kind-specific placement parameters (cluster centers,
scales, anomaly boxes); missing keys fall back to DEFAULT_SYNTHETIC_GEOMETRY.
"""
@dataclass(frozen=True)
class SyntheticSpec:
    kind: SyntheticKind
    n_normal: int
    n_point_anomalies: int
    n_cluster_anomalies: int
    dimension: int
    seed: int = 42
    geometry: Dict[str, Any] = field(default_factory=dict)

    @property
    def n_total(self) -> int:
        return self.n_normal + self.n_point_anomalies + self.n_cluster_anomalies

    @property
    def n_anomalies(self) -> int:
        return self.n_point_anomalies + self.n_cluster_anomalies

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": SyntheticKind(self.kind).value,
            "n_normal": self.n_normal,
            "n_point_anomalies": self.n_point_anomalies,
            "n_cluster_anomalies": self.n_cluster_anomalies,
            "dimension": self.dimension,
            "seed": self.seed,
            "geometry": {key: self.geometry[key] for key in sorted(self.geometry)},
        }
