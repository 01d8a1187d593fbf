from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict

from Edrod.Exception.EdrodError import KInvalid
from Edrod.Model.KernelSpec import KernelSpec, Normalization
from Edrod.Utility.Defaults import DEFAULT_DETECTOR_SETTINGS


class Method(str, Enum):
    EDROD = "edrod"
    KNN_SUM = "knn"
    KDE_DENSITY = "kde"
    LOF = "lof"


class Distance(str, Enum):
    MAHALANOBIS = "mahalanobis"
    EUCLIDEAN = "euclidean"


"""Which detector to run and with which parameters.

Irrelevant fields (k for KDE, bandwidth for KNN/LOF) keep the documented
defaults from DEFAULT_DETECTOR_SETTINGS and are never read by that method.
"""
@dataclass(frozen=True)
class DetectorSpec:
    method: Method = Method.EDROD
    k: int = 20
    bandwidth: float = 1.0
    distance: Distance = Distance.MAHALANOBIS
    normalization: Normalization = Normalization.STANDARD_GAUSSIAN

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "distance", Distance(self.distance))
        object.__setattr__(self, "normalization", Normalization(self.normalization))
        if isinstance(self.k, bool) or int(self.k) != self.k:
            raise KInvalid(f"k must be an integer, got {self.k!r}", location="k")
        object.__setattr__(self, "k", int(self.k))
        if self.k < 1:
            raise KInvalid(f"k must be at least 1, got {self.k}", location="k")
        # validates the bandwidth
        KernelSpec(bandwidth=self.bandwidth, normalization=self.normalization)
        object.__setattr__(self, "bandwidth", float(self.bandwidth))

    @classmethod
    def for_method(cls, method, **overrides: Any) -> "DetectorSpec":
        method = Method(method)
        settings = dict(DEFAULT_DETECTOR_SETTINGS[method.value])
        settings.update({key: value for key, value in overrides.items() if value is not None})
        return cls(method=method, **settings)

    def kernel_spec(self) -> KernelSpec:
        return KernelSpec(bandwidth=self.bandwidth, normalization=self.normalization)

    def with_k(self, k: int) -> "DetectorSpec":
        return replace(self, k=k)

    def with_bandwidth(self, bandwidth: float) -> "DetectorSpec":
        return replace(self, bandwidth=bandwidth)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method.value,
            "k": self.k,
            "bandwidth": self.bandwidth,
            "distance": self.distance.value,
            "normalization": self.normalization.value,
        }
