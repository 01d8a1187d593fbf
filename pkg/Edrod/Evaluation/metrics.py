"""
Rank-based evaluation: Mann-Whitney ROC-AUC, top-N confusion coloring and
the cross-dataset summaries used when comparing detectors.
"""
import logging
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np
from scipy.stats import rankdata

from Edrod.Exception.EdrodError import DimensionError, InsufficientData, InvalidScores, LabelError, SingleClassError
from Edrod.Model.AucResult import AucResult
from Edrod.Model.ConfusionColoring import Color, ConfusionColoring

logger = logging.getLogger(__name__)


def _check_inputs(scores, labels) -> Tuple[np.ndarray, np.ndarray]:
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels)
    if scores.ndim != 1 or scores.shape != labels.shape:
        raise DimensionError(f"scores {scores.shape} and labels {labels.shape} must be matching vectors")
    if np.isnan(scores).any() or np.isposinf(scores).any():
        bad = int(np.flatnonzero(np.isnan(scores) | np.isposinf(scores))[0])
        raise InvalidScores("scores must be finite or -inf", location=f"sample {bad}")
    if not np.all(np.isin(labels, (0, 1))):
        raise LabelError("labels must be 0 (normal) or 1 (anomaly)")
    return scores, labels.astype(np.int64)


def roc_auc(scores, labels) -> AucResult:
    """Mann-Whitney AUC with average ranks on ties; -inf scores rank below everything."""
    scores, labels = _check_inputs(scores, labels)
    n_pos = int(labels.sum())
    n_neg = int(labels.size - n_pos)
    if n_pos == 0 or n_neg == 0:
        raise SingleClassError(f"labels need both classes, got {n_pos} anomalies and {n_neg} normals")

    ranks = rankdata(scores, method="average")
    u_statistic = ranks[labels == 1].sum() - n_pos * (n_pos + 1) / 2.0
    auc = float(u_statistic / (n_pos * n_neg))
    tie_adjusted = bool(np.unique(scores).size < scores.size)
    return AucResult(auc=min(max(auc, 0.0), 1.0), n_pos=n_pos, n_neg=n_neg, tie_adjusted=tie_adjusted)


def confusion_coloring(scores, labels, top_n: int) -> ConfusionColoring:
    """Flag the top_n scores (ties at the cutoff to the lower index) and color every sample."""
    scores, labels = _check_inputs(scores, labels)
    n = scores.size
    if not 1 <= top_n <= n:
        raise ValueError(f"top_n must be between 1 and {n}, got {top_n}")

    order = np.lexsort((np.arange(n), -scores))
    flagged = np.zeros(n, dtype=bool)
    flagged[order[:top_n]] = True
    anomalous = labels == 1

    per_sample = np.empty(n, dtype=object)
    per_sample[~flagged & ~anomalous] = Color.GREEN
    per_sample[flagged & anomalous] = Color.YELLOW
    per_sample[flagged & ~anomalous] = Color.PURPLE
    per_sample[~flagged & anomalous] = Color.RED
    return ConfusionColoring(
        green=int((~flagged & ~anomalous).sum()),
        yellow=int((flagged & anomalous).sum()),
        purple=int((flagged & ~anomalous).sum()),
        red=int((~flagged & anomalous).sum()),
        per_sample=per_sample,
        top_n=int(top_n),
    )


def rank_methods(table: Mapping[str, Mapping[str, float]]) -> Dict[str, Dict[str, float]]:
    """Average rank (1 = best AUC, average ranks on ties) and mean AUC per method.

    `table` maps dataset name -> method -> AUC; every dataset must cover the same methods.
    """
    if not table:
        raise InsufficientData("no datasets to rank")
    methods = sorted(next(iter(table.values())))
    rank_rows = []
    auc_rows = []
    for dataset, row in table.items():
        if sorted(row) != methods:
            raise ValueError(f"dataset {dataset!r} does not cover methods {methods}")
        aucs = np.array([row[method] for method in methods], dtype=np.float64)
        rank_rows.append(rankdata(-aucs, method="average"))
        auc_rows.append(aucs)
    ranks = np.mean(rank_rows, axis=0)
    means = np.mean(auc_rows, axis=0)
    return {
        method: {"average_rank": float(ranks[i]), "mean_auc": float(means[i])}
        for i, method in enumerate(methods)
    }


def summarize_distribution(values: Sequence[float]) -> Dict[str, float]:
    """Box-plot summary: min, quartiles, median and max."""
    array = np.asarray(values, dtype=np.float64)
    if array.size == 0:
        raise InsufficientData("cannot summarize an empty set of values")
    q1, median, q3 = np.percentile(array, [25, 50, 75])
    return {
        "min": float(array.min()),
        "q1": float(q1),
        "median": float(median),
        "q3": float(q3),
        "max": float(array.max()),
    }


def fit_runtime_exponent(n_grid: Sequence[int], seconds: Sequence[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    n = np.asarray(n_grid, dtype=np.float64)
    t = np.asarray(seconds, dtype=np.float64)
    if n.size < 2 or n.shape != t.shape:
        raise InsufficientData("runtime fit needs at least two matching (n, seconds) points")
    if np.any(n <= 0) or np.any(t <= 0):
        raise ValueError("sample sizes and timings must be positive")
    slope, _ = np.polyfit(np.log(n), np.log(t), 1)
    logger.info("Fitted runtime exponent %.3f over n=%s", slope, list(n_grid))
    return float(slope)
