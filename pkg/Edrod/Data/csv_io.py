"""
CSV ingestion and emission for datasets.

Files are comma separated, UTF-8, '.' decimals, header optional. Lines that
start with '#' are comments (artifact headers written by this package).
"""
import logging
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd

from Edrod.Data.writers import open_artifact, write_header_lines
from Edrod.Exception.EdrodError import EdrodIOError, EmptyError, LabelError, ParseError
from Edrod.Model.Dataset import Dataset

logger = logging.getLogger(__name__)

LABEL_COLUMN = "label"

ColumnRef = Union[str, int]


def _resolve_column(frame: pd.DataFrame, column: ColumnRef) -> Any:
    if column in frame.columns:
        return column
    # numeric references select by position
    text = str(column)
    if text.lstrip("-").isdigit():
        position = int(text)
        if -len(frame.columns) <= position < len(frame.columns):
            return frame.columns[position]
    raise ParseError(f"column {column!r} not found; available: {list(map(str, frame.columns))}", column=str(column))


def _read_frame(path: str, has_header: bool) -> pd.DataFrame:
    try:
        frame = pd.read_csv(
            path,
            header=0 if has_header else None,
            comment="#",
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            encoding="utf-8",
        )
    except FileNotFoundError:
        raise EdrodIOError(f"input file not found: {path}", location=path)
    except pd.errors.EmptyDataError:
        raise EmptyError(f"input file has no data: {path}", location=path)
    except pd.errors.ParserError as e:
        raise ParseError(f"malformed CSV in {path}: {e}")
    except (OSError, UnicodeDecodeError) as e:
        raise EdrodIOError(f"cannot read {path}: {e}", location=path)
    if frame.empty:
        raise EmptyError(f"input file has no data rows: {path}", location=path)
    if not has_header:
        frame.columns = [f"x{j}" for j in range(frame.shape[1])]
    return frame


def _first_bad_row(raw: pd.Series) -> Optional[int]:
    # locating only; pandas' fast parser is not correctly rounded
    checked = pd.to_numeric(raw, errors="coerce").to_numpy(dtype=np.float64)
    bad = np.flatnonzero(~np.isfinite(checked))
    return int(bad[0]) if bad.size else None


def _parse_features(frame: pd.DataFrame, columns: Sequence[Any], first_row: int) -> np.ndarray:
    samples = np.empty((frame.shape[0], len(columns)), dtype=np.float64)
    for j, column in enumerate(columns):
        raw = frame[column].str.strip()
        row = _first_bad_row(raw)
        if row is None:
            try:
                # float() per cell, correctly rounded
                samples[:, j] = raw.to_numpy(dtype=object).astype(np.float64)
                continue
            except ValueError:
                row = next(i for i, text in enumerate(raw) if not _is_float(text))
        raise ParseError(f"expected a finite number, got {raw.iloc[row]!r}",
                         row=first_row + row, column=str(column))
    return samples


def _is_float(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _parse_labels(frame: pd.DataFrame, column: Any, first_row: int) -> np.ndarray:
    raw = frame[column].str.strip()
    values = pd.to_numeric(raw, errors="coerce").to_numpy(dtype=np.float64)
    bad = ~np.isin(values, (0.0, 1.0))
    if bad.any():
        row = int(np.flatnonzero(bad)[0])
        raise LabelError(f"label must be 0 or 1, got {raw.iloc[row]!r}",
                         location=f"row {first_row + row}, column {str(column)!r}")
    return values.astype(np.int64)


def load_csv(path: str, label_column: Optional[ColumnRef] = None, has_header: bool = True,
             feature_columns: Optional[Sequence[ColumnRef]] = None, ignore_labels: bool = False) -> Dataset:
    """Load a dataset; every non-label column is a feature unless `feature_columns` is given.

    Without `label_column`, a header column named `label` is the label column unless
    `ignore_labels` is set, in which case it is dropped from the features as well.

    Reported row numbers are 1-based data rows (the header line is not counted).
    """
    frame = _read_frame(path, has_header)
    if label_column is not None:
        if ignore_labels:
            raise ValueError("label_column and ignore_labels are mutually exclusive")
        label = _resolve_column(frame, label_column)
    else:
        label = LABEL_COLUMN if has_header and LABEL_COLUMN in frame.columns else None
    if feature_columns is not None:
        features = [_resolve_column(frame, column) for column in feature_columns]
    else:
        features = [column for column in frame.columns if column != label]
    if not features:
        raise ParseError("no feature columns left after removing the label column")

    samples = _parse_features(frame, features, first_row=1)
    labels = _parse_labels(frame, label, first_row=1) if label is not None and not ignore_labels else None
    names = tuple(str(column) for column in features) if has_header else None
    logger.info("Loaded %s: %d samples, %d features%s", path, samples.shape[0], samples.shape[1],
                ", labelled" if labels is not None else "")
    return Dataset(samples=samples, labels=labels, feature_names=names)


def dataset_frame(dataset: Dataset) -> pd.DataFrame:
    frame = pd.DataFrame(dataset.samples, columns=list(dataset.column_names()))
    if dataset.has_labels:
        frame[LABEL_COLUMN] = dataset.labels
    return frame


def save_csv(dataset: Dataset, path: Optional[str], header: Optional[Dict[str, Any]] = None) -> None:
    """Write a dataset (plus a `label` column when labelled) with round-trip-exact floats."""
    with open_artifact(path) as handle:
        if header is not None:
            write_header_lines(handle, header)
        dataset_frame(dataset).to_csv(handle, index=False, lineterminator="\n")
    logger.info("Wrote %d samples to %s", dataset.n, path or "stdout")
