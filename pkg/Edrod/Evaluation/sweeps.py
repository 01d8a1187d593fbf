"""
Parameter sweeps: AUC as a function of K or of the kernel width h.

A sweep builds one Workspace for the dataset, so the distance matrix and the
density vector are computed once and shared by every grid point.
"""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from Edrod.Business.Workspace import Workspace
from Edrod.Detectors.DetectorProvider import DetectorProvider
from Edrod.Evaluation.metrics import roc_auc
from Edrod.Events.event_dispatcher import SWEEP_POINT, EventDispatcher
from Edrod.Exception.EdrodError import InsufficientData, LabelError
from Edrod.Model.Dataset import Dataset
from Edrod.Model.DetectorSpec import DetectorSpec
from Edrod.Model.KernelSpec import KernelSpec
from Edrod.Model.SweepCurve import SweepCurve
from Edrod.Neighbors.selection import check_k

logger = logging.getLogger(__name__)


def _workspace_for(data, threads: int) -> Workspace:
    workspace = data if isinstance(data, Workspace) else Workspace(data, threads=threads)
    if not workspace.data.has_labels:
        raise LabelError("parameter sweeps need ground-truth labels")
    return workspace


def _auc_at(workspace: Workspace, spec: DetectorSpec) -> float:
    report = DetectorProvider.InitializeDetector(spec).score(workspace)
    return roc_auc(report.ranking, workspace.data.labels).auc


def sweep_k(data, detector: DetectorSpec, k_grid: Sequence[int], threads: int = 1,
            dispatcher: Optional[EventDispatcher] = None) -> SweepCurve:
    """One AUC per K at a fixed bandwidth; `data` is a Dataset or a prepared Workspace."""
    workspace = _workspace_for(data, threads)
    grid = [int(k) for k in k_grid]
    for k in grid:
        check_k(k, workspace.data.n)

    aucs = []
    for k in grid:
        auc = _auc_at(workspace, detector.with_k(k))
        aucs.append(auc)
        if dispatcher:
            dispatcher.dispatch(SWEEP_POINT, parameter="K", value=k, auc=auc, method=detector.method.value)
    curve = SweepCurve(parameter_name="K", grid=np.array(grid, dtype=np.float64), auc_values=np.array(aucs))
    logger.info("K sweep for %s over %d points: spread %.4g", detector.method.value, len(grid), curve.spread)
    return curve


def grid_search_bandwidth(data, detector: DetectorSpec, h_grid: Sequence[float], threads: int = 1,
                          dispatcher: Optional[EventDispatcher] = None) -> Tuple[SweepCurve, float]:
    """AUC per kernel width; returns the curve and the best h (ties to the smallest h)."""
    workspace = _workspace_for(data, threads)
    grid = [float(h) for h in h_grid]
    for h in grid:
        KernelSpec(bandwidth=h)

    aucs = []
    for h in grid:
        auc = _auc_at(workspace, detector.with_bandwidth(h))
        aucs.append(auc)
        if dispatcher:
            dispatcher.dispatch(SWEEP_POINT, parameter="h", value=h, auc=auc, method=detector.method.value)
    curve = SweepCurve(parameter_name="h", grid=np.array(grid), auc_values=np.array(aucs))
    best = curve.best()
    logger.info("Bandwidth grid search for %s: best h=%g (AUC %.4f)", detector.method.value, best,
                float(curve.auc_values.max()))
    return curve, best


def average_curves(curves: Sequence[SweepCurve]) -> SweepCurve:
    """Pointwise mean AUC over curves that share one grid."""
    if not curves:
        raise InsufficientData("no curves to average")
    first = curves[0]
    for curve in curves[1:]:
        if curve.parameter_name != first.parameter_name or not np.array_equal(curve.grid, first.grid):
            raise ValueError("curves must share the parameter and the grid to be averaged")
    stacked = np.vstack([curve.auc_values for curve in curves])
    return SweepCurve(
        parameter_name=first.parameter_name,
        grid=first.grid,
        auc_values=stacked.mean(axis=0),
        instances=sum(curve.instances for curve in curves),
    )
