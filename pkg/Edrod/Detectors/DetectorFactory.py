"""
Factory for detectors. Detectors register themselves by method key and
callers request instances via `create`.
"""
from typing import Callable, Dict, List

from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Model.DetectorSpec import DetectorSpec


class DetectorFactory:
    _registry: Dict[str, Callable[[DetectorSpec], IDetector]] = {}

    @classmethod
    def register(cls, key: str, creator: Callable[[DetectorSpec], IDetector]) -> None:
        cls._registry[key] = creator

    @classmethod
    def create(cls, key: str, spec: DetectorSpec) -> IDetector:
        creator = cls._registry.get(key)
        if not creator:
            raise KeyError(f"Detector not registered: {key}")
        return creator(spec)

    @classmethod
    def registered_keys(cls) -> List[str]:
        return list(cls._registry.keys())
