from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from Edrod.Exception.EdrodError import DatasetError, DimensionError, InsufficientData, LabelError

"""Dense n x d sample matrix with optional binary ground truth."""
@dataclass(frozen=True)
class Dataset:
    samples: np.ndarray
    labels: Optional[np.ndarray] = None
    feature_names: Optional[Tuple[str, ...]] = field(default=None)

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.float64, copy=True)
        if samples.ndim == 1:
            samples = samples.reshape(-1, 1)
        if samples.ndim != 2:
            raise DimensionError(f"samples must be a 2-D matrix, got {samples.ndim} dimensions")
        n, d = samples.shape
        if d < 1:
            raise DimensionError("dataset needs at least one feature column")
        if n < 2:
            raise InsufficientData(f"dataset needs at least 2 samples, got {n}")
        bad = ~np.isfinite(samples)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            raise DatasetError("non-finite entry in samples", location=f"sample {row}, feature {col}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", np.ascontiguousarray(samples))

        if self.labels is not None:
            labels = np.asarray(self.labels)
            if labels.shape != (n,):
                raise LabelError(f"labels must have length {n}, got shape {labels.shape}")
            if not np.all(np.isin(labels, (0, 1))):
                raise LabelError("labels must be 0 (normal) or 1 (anomaly)")
            labels = labels.astype(np.int64)
            labels.setflags(write=False)
            object.__setattr__(self, "labels", labels)

        if self.feature_names is not None:
            names = tuple(str(name) for name in self.feature_names)
            if len(names) != d:
                raise DimensionError(f"expected {d} feature names, got {len(names)}")
            object.__setattr__(self, "feature_names", names)

    @property
    def n(self) -> int:
        return self.samples.shape[0]

    @property
    def d(self) -> int:
        return self.samples.shape[1]

    @property
    def has_labels(self) -> bool:
        return self.labels is not None

    def column_names(self) -> Tuple[str, ...]:
        return self.feature_names or tuple(f"x{j}" for j in range(self.d))
