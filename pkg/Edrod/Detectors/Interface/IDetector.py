"""
Detector abstraction. Implementations turn a cached Workspace into a
ScoreReport; they never recompute what the Workspace already holds.
"""

from abc import ABC, abstractmethod

from Edrod.Business.Workspace import Workspace
from Edrod.Model.DetectorSpec import DetectorSpec
from Edrod.Model.ScoreReport import ScoreReport


class IDetector(ABC):
    """Abstract anomaly detector."""

    def __init__(self, spec: DetectorSpec):
        self.spec = spec

    @abstractmethod
    def score(self, workspace: Workspace) -> ScoreReport:
        """Score every sample of the workspace's dataset."""
        pass
