"""Registers the built-in detectors and hands out instances for a DetectorSpec."""

from Edrod.Detectors.DetectorFactory import DetectorFactory
from Edrod.Detectors.Implementation.EdrodDetector import EdrodDetector
from Edrod.Detectors.Implementation.KdeDetector import KdeDetector
from Edrod.Detectors.Implementation.KnnSumDetector import KnnSumDetector
from Edrod.Detectors.Implementation.LofDetector import LofDetector
from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Model.DetectorSpec import DetectorSpec, Method

DetectorFactory.register(Method.EDROD.value, EdrodDetector)
DetectorFactory.register(Method.KNN_SUM.value, KnnSumDetector)
DetectorFactory.register(Method.KDE_DENSITY.value, KdeDetector)
DetectorFactory.register(Method.LOF.value, LofDetector)


class DetectorProvider:
    """Facade over `DetectorFactory` keyed by the spec's method."""

    @staticmethod
    def InitializeDetector(spec: DetectorSpec) -> IDetector:
        return DetectorFactory.create(spec.method.value, spec)
