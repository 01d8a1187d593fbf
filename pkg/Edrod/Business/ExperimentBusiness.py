import logging
import time
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from Edrod.Business.Workspace import Workspace
from Edrod.Data.csv_io import load_csv
from Edrod.Data.synthetic import default_spec, generate
from Edrod.Detectors.DetectorProvider import DetectorProvider
from Edrod.Evaluation.metrics import (
    confusion_coloring,
    fit_runtime_exponent,
    rank_methods,
    roc_auc,
    summarize_distribution,
)
from Edrod.Evaluation.sweeps import average_curves, grid_search_bandwidth, sweep_k
from Edrod.Events.event_dispatcher import RUN_COMPLETED, RUN_STARTED, EventDispatcher
from Edrod.Exception.EdrodError import LabelError
from Edrod.Model.AucResult import AucResult
from Edrod.Model.BenchResult import BenchResult
from Edrod.Model.ConfusionColoring import ConfusionColoring
from Edrod.Model.Dataset import Dataset
from Edrod.Model.DetectorSpec import DetectorSpec, Method
from Edrod.Model.KernelSpec import Normalization
from Edrod.Model.RunConfig import RunConfig
from Edrod.Model.ScoreReport import ScoreReport
from Edrod.Model.SweepCurve import SweepCurve
from Edrod.Model.SyntheticSpec import SyntheticKind
from Edrod.Neighbors.selection import select_neighbors
from Edrod.Scoring.entropy import edr_scores, local_entropy, normalize_group
from Edrod.Utility.Defaults import BENCH_MIN_SECONDS

logger = logging.getLogger(__name__)


class ExperimentBusiness:

    """Runs the detection experiments on one or more datasets.
    Emits events via `EventDispatcher` (run_started, sweep_point, run_completed).
    """
    def __init__(self, threads: int = 1, dispatcher: Optional[EventDispatcher] = None):
        self.threads = threads
        self.dispatcher = dispatcher or EventDispatcher()

    def LoadDataset(self, config: RunConfig, seed: Optional[int] = None) -> Dataset:
        """Dataset named by the config: the input file, or a generated look-alike."""
        if config.input_path:
            return load_csv(config.input_path, label_column=config.label_column, has_header=config.has_header,
                            ignore_labels=config.ignore_labels)
        spec = config.synthetic
        if spec is None:
            raise ValueError("either an input file or a synthetic kind is required")
        if seed is not None and seed != spec.seed:
            spec = replace(spec, seed=seed)
        return generate(spec)

    def Score(self, data: Dataset, detector: DetectorSpec) -> ScoreReport:
        self.dispatcher.dispatch(RUN_STARTED, run="score", method=detector.method.value, n=data.n)
        report = DetectorProvider.InitializeDetector(detector).score(Workspace(data, threads=self.threads))
        self.dispatcher.dispatch(RUN_COMPLETED, run="score", method=detector.method.value)
        return report

    def Evaluate(self, data: Dataset, detector: DetectorSpec) -> Tuple[ScoreReport, AucResult]:
        _require_labels(data)
        report = self.Score(data, detector)
        result = roc_auc(report.ranking, data.labels)
        logger.info("%s AUC %.4f (%d anomalies, %d normals)", detector.method.value, result.auc,
                    result.n_pos, result.n_neg)
        return report, result

    def Colorize(self, data: Dataset, detector: DetectorSpec,
                 top_n: Optional[int] = None) -> Tuple[ScoreReport, ConfusionColoring]:
        """Flag the top_n scores; defaults to the true anomaly count."""
        _require_labels(data)
        report = self.Score(data, detector)
        cutoff = int(data.labels.sum()) if top_n is None else top_n
        return report, confusion_coloring(report.ranking, data.labels, cutoff)

    def SweepK(self, config: RunConfig) -> SweepCurve:
        """K sweep on the configured dataset, averaged over `instances` seeds for generated data."""
        self.dispatcher.dispatch(RUN_STARTED, run="sweep-k", method=config.detector.method.value,
                                 instances=config.instances)
        curves = []
        for seed in self._instance_seeds(config):
            data = self.LoadDataset(config, seed)
            curves.append(sweep_k(data, config.detector, config.k_grid, self.threads, self.dispatcher))
        curve = average_curves(curves) if len(curves) > 1 else curves[0]
        self.dispatcher.dispatch(RUN_COMPLETED, run="sweep-k", spread=curve.spread, mean_auc=curve.mean_auc)
        return curve

    def GridH(self, data: Dataset, detector: DetectorSpec, h_grid: Sequence[float]) -> Tuple[SweepCurve, float]:
        self.dispatcher.dispatch(RUN_STARTED, run="grid-h", method=detector.method.value, points=len(h_grid))
        curve, best = grid_search_bandwidth(data, detector, h_grid, self.threads, self.dispatcher)
        self.dispatcher.dispatch(RUN_COMPLETED, run="grid-h", best=best)
        return curve, best

    def Compare(self, datasets: Dict[str, Dataset], k: Optional[int] = None, bandwidth: Optional[float] = None,
                methods: Sequence[str] = tuple(method.value for method in Method),
                normalization: Optional[Normalization] = None,
                ) -> Tuple[List[Dict[str, Any]], Dict[str, Any]]:
        """AUC of every method on every dataset, with average rank and box summary per method.

        Each method keeps its default distance; k, bandwidth and normalization apply to all.
        """
        rows: List[Dict[str, Any]] = []
        table: Dict[str, Dict[str, float]] = {}
        for name, data in datasets.items():
            _require_labels(data)
            workspace = Workspace(data, threads=self.threads)
            table[name] = {}
            for method in methods:
                spec = DetectorSpec.for_method(method, k=k, bandwidth=bandwidth, normalization=normalization)
                report = DetectorProvider.InitializeDetector(spec).score(workspace)
                auc = roc_auc(report.ranking, data.labels).auc
                table[name][method] = auc
                rows.append({"instance": name, "method": method, "auc": auc})
            self.dispatcher.dispatch(RUN_COMPLETED, run="compare", instance=name)

        ranking = rank_methods(table)
        summary = {
            method: {
                **ranking[method],
                "distribution": summarize_distribution([table[name][method] for name in table]),
            }
            for method in methods
        }
        return rows, summary

    def Bench(self, n_grid: Sequence[int], dimension: int = 10, repeats: int = 3, seed: int = 42,
              detector: Optional[DetectorSpec] = None, min_seconds: float = BENCH_MIN_SECONDS) -> BenchResult:
        """Best-of-`repeats` per-run wall time of the full scorer on 10d look-alikes of each size.

        Every repeat loops the scorer until `min_seconds` have passed and keeps the mean per run.
        """
        detector = detector or DetectorSpec.for_method(Method.EDROD)
        seconds = []
        for n in n_grid:
            data = generate(default_spec(SyntheticKind.TEN_DIM_GAUSSIAN, seed, n_samples=n, dimension=dimension))
            best = float("inf")
            for _ in range(max(1, repeats)):
                best = min(best, self._time_scorer(data, detector, min_seconds))
            seconds.append(best)
            self.dispatcher.dispatch(RUN_COMPLETED, run="bench", n=n, seconds=best)
        exponent = fit_runtime_exponent(n_grid, seconds)
        return BenchResult(n_grid=tuple(int(n) for n in n_grid), seconds=tuple(seconds),
                           dimension=dimension, exponent=exponent)

    def Explain(self, data: Dataset, detector: DetectorSpec, index: int) -> Dict[str, Any]:
        """Local group of one sample: members, distances, normalized densities, entropy and log-EDR."""
        workspace = Workspace(data, threads=self.threads)
        density = workspace.density(detector.kernel_spec())
        table = select_neighbors(workspace.distances(detector.distance), detector.k, self.threads)
        group = normalize_group(density, table, index)
        report = edr_scores(density, table)
        return {
            "index": index,
            "members": group.members.tolist(),
            "distances": [0.0] + table.distances[index].tolist(),
            "log_density": density.log_values[group.members].tolist(),
            "normalized_density": group.normalized_density.tolist(),
            "entropy": local_entropy(group),
            "log_edr": float(report.log_edr[index]),
        }

    def _time_scorer(self, data: Dataset, detector: DetectorSpec, min_seconds: float) -> float:
        runs = 0
        start = time.perf_counter()
        while True:
            DetectorProvider.InitializeDetector(detector).score(Workspace(data, threads=self.threads))
            runs += 1
            elapsed = time.perf_counter() - start
            if elapsed >= min_seconds:
                return elapsed / runs

    @staticmethod
    def _instance_seeds(config: RunConfig) -> List[Optional[int]]:
        if config.input_path or config.instances <= 1:
            return [None]
        return [config.seed + i for i in range(config.instances)]


def _require_labels(data: Dataset) -> None:
    if not data.has_labels:
        raise LabelError("this run needs ground-truth labels (pass --label-column)")
