import logging

import numpy as np
import pytest

from Edrod.Business.Workspace import Workspace
from Edrod.Detectors.DetectorFactory import DetectorFactory
from Edrod.Detectors.DetectorProvider import DetectorProvider
from Edrod.Detectors.Implementation.EdrodDetector import EdrodDetector
from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Events.event_dispatcher import SWEEP_POINT, EventDispatcher, attach_logging
from Edrod.Model.Dataset import Dataset
from Edrod.Model.DetectorSpec import DetectorSpec, Method
from Edrod.Model.ScoreReport import ScoreReport


class DummyDetector(IDetector):
    def score(self, workspace):
        return ScoreReport(method="dummy", ranking=np.zeros(workspace.data.n), log_domain=False)


def test_detector_factory_register_and_create():
    DetectorFactory.register("tmp", DummyDetector)
    spec = DetectorSpec()
    detector = DetectorFactory.create("tmp", spec)
    assert isinstance(detector, DummyDetector)
    assert detector.spec is spec
    report = detector.score(Workspace(Dataset(samples=[[0.0], [1.0]])))
    assert report.ranking.tolist() == [0.0, 0.0]


def test_detector_factory_unknown_key():
    with pytest.raises(KeyError):
        DetectorFactory.create("missing", DetectorSpec())


def test_provider_maps_every_method():
    assert {method.value for method in Method} <= set(DetectorFactory.registered_keys())
    assert isinstance(DetectorProvider.InitializeDetector(DetectorSpec.for_method("edrod")), EdrodDetector)


def test_event_dispatcher_subscribe_dispatch():
    disp = EventDispatcher()
    events = []

    def on_point(**kwargs):
        events.append((kwargs.get("parameter"), kwargs.get("value")))

    disp.subscribe(SWEEP_POINT, on_point)
    disp.dispatch(SWEEP_POINT, parameter="K", value=4)
    disp.unsubscribe(SWEEP_POINT, on_point)
    disp.dispatch(SWEEP_POINT, parameter="K", value=12)
    assert events == [("K", 4)]
    # unknown callbacks are ignored
    disp.unsubscribe(SWEEP_POINT, on_point)


def test_failing_listener_does_not_stop_dispatch(caplog):
    disp = EventDispatcher()
    seen = []

    def broken(**kwargs):
        raise RuntimeError("boom")

    disp.subscribe(SWEEP_POINT, broken)
    disp.subscribe(SWEEP_POINT, lambda **kwargs: seen.append(kwargs["value"]))
    with caplog.at_level(logging.ERROR):
        disp.dispatch(SWEEP_POINT, parameter="h", value=0.5)
    assert seen == [0.5]
    assert "Listener for sweep_point failed" in caplog.text


def test_attach_logging(caplog):
    disp = EventDispatcher()
    attach_logging(disp)
    with caplog.at_level(logging.INFO, logger="Edrod.Events.event_dispatcher"):
        disp.dispatch(SWEEP_POINT, value=20, parameter="K", auc=0.97)
    assert "sweep_point auc=0.97, parameter=K, value=20" in caplog.text
