"""
Artifact writers for scores, sweep curves and comparison tables.

Every artifact starts with the tool version and the resolved run config:
CSV files carry them as '#' comment lines, JSON-lines files as a first
{"config": ..., "version": ...} object. Floats use Python's shortest
round-trip form; non-finite values are written blank (CSV) or null (JSON).
"""
import json
import logging
import math
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, TextIO

import numpy as np
import pandas as pd

from Edrod.Exception.EdrodError import EdrodIOError
from Edrod.Model.ScoreReport import ScoreReport
from Edrod.Model.SweepCurve import SweepCurve

logger = logging.getLogger(__name__)

FORMATS = ("csv", "jsonl")


def _version() -> str:
    from Edrod import __version__
    return __version__


def _json_value(value: Any) -> Any:
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, np.ndarray):
        return [_json_value(item) for item in value.tolist()]
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    if isinstance(value, dict):
        return {str(key): _json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(item) for item in value]
    return value


def to_json(payload: Any) -> str:
    return json.dumps(_json_value(payload), sort_keys=True, allow_nan=False)


def write_header_lines(handle: TextIO, header: Dict[str, Any]) -> None:
    handle.write(f"# edrod {_version()}\n")
    handle.write(f"# config: {to_json(header)}\n")


@contextmanager
def open_artifact(path: Optional[str]) -> Iterator[TextIO]:
    """Open `path` for writing; None or '-' writes to stdout."""
    if path in (None, "-"):
        yield sys.stdout
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle
    except OSError as e:
        raise EdrodIOError(f"cannot write {path}: {e}", location=path)


def write_table(frame: pd.DataFrame, path: Optional[str], fmt: str = "csv",
                header: Optional[Dict[str, Any]] = None, trailer: Optional[Dict[str, Any]] = None) -> None:
    """Write a table as CSV or JSON-lines with the artifact header in front."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    with open_artifact(path) as handle:
        if fmt == "csv":
            if header is not None:
                write_header_lines(handle, header)
            if trailer is not None:
                handle.write(f"# summary: {to_json(trailer)}\n")
            frame.to_csv(handle, index=False, lineterminator="\n", na_rep="")
        else:
            if header is not None:
                handle.write(to_json({"config": header, "version": _version()}) + "\n")
            for record in frame.to_dict(orient="records"):
                handle.write(to_json(record) + "\n")
            if trailer is not None:
                handle.write(to_json({"summary": trailer}) + "\n")
    logger.info("Wrote %d rows to %s", len(frame), path or "stdout")


def score_frame(report: ScoreReport, colors: Optional[np.ndarray] = None) -> pd.DataFrame:
    columns: Dict[str, Any] = {
        "index": np.arange(report.n),
        "score": report.linear_scores(),
        "log_score": report.log_scores(),
        "rank": report.ranks(),
        "normalized": report.normalized(),
    }
    if report.labels is not None:
        columns["label"] = np.asarray(report.labels, dtype=np.int64)
    if colors is not None:
        columns["color"] = [getattr(color, "value", color) for color in colors]
    return pd.DataFrame(columns)


def save_scores(report: ScoreReport, path: Optional[str], fmt: str = "csv",
                header: Optional[Dict[str, Any]] = None, colors: Optional[np.ndarray] = None,
                trailer: Optional[Dict[str, Any]] = None) -> None:
    """Per-sample index, score, log-score, rank, min-max channel, plus label/color when known."""
    write_table(score_frame(report, colors), path, fmt, header, trailer)


def save_curve(curve: SweepCurve, path: Optional[str], fmt: str = "csv",
               header: Optional[Dict[str, Any]] = None) -> None:
    """One (parameter value, AUC) row per grid point; the summary goes in the trailer."""
    values: List[Any] = curve.grid.tolist()
    if curve.parameter_name == "K":
        values = [int(value) for value in values]
    frame = pd.DataFrame({curve.parameter_name: values, "auc": curve.auc_values})
    write_table(frame, path, fmt, header, trailer=curve.summary())


def save_comparison(rows: List[Dict[str, Any]], summary: Dict[str, Any], path: Optional[str],
                    fmt: str = "csv", header: Optional[Dict[str, Any]] = None) -> None:
    write_table(pd.DataFrame(rows), path, fmt, header, trailer=summary)
