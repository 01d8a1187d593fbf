from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

"""Per-sample anomaly scores from any detector.

`ranking` is what AUC, ranks and top-N flagging read (higher = more anomalous,
-inf allowed as a bottom sentinel). When `log_domain` is set, `ranking` is the
natural log of a positive linear score (log-EDR for EDROD, -log density for KDE).
"""
@dataclass(frozen=True)
class ScoreReport:
    method: str
    ranking: np.ndarray
    log_domain: bool
    params: Dict[str, Any] = field(default_factory=dict)
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    labels: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return self.ranking.shape[0]

    def linear_scores(self) -> np.ndarray:
        """Linear-scale scores; NaN where the value is not representable."""
        if self.log_domain:
            with np.errstate(over="ignore", under="ignore"):
                linear = np.exp(self.ranking)
        else:
            linear = self.ranking.astype(np.float64, copy=True)
        return np.where(np.isfinite(linear), linear, np.nan)

    def log_scores(self) -> np.ndarray:
        """Natural-log scores; NaN where the score has no finite logarithm."""
        if self.log_domain:
            logs = self.ranking.astype(np.float64, copy=True)
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                logs = np.log(np.where(self.ranking > 0, self.ranking, np.nan))
        return np.where(np.isfinite(logs), logs, np.nan)

    def order(self) -> np.ndarray:
        """Sample indices from most to least anomalous; ties by ascending index."""
        return np.lexsort((np.arange(self.n), -self.ranking))

    def ranks(self) -> np.ndarray:
        """Descending rank per sample, 1 = most anomalous."""
        ranks = np.empty(self.n, dtype=np.int64)
        ranks[self.order()] = np.arange(1, self.n + 1)
        return ranks

    def normalized(self) -> np.ndarray:
        """Min-max normalization of the ranking channel over its finite entries (heatmap channel)."""
        finite = np.isfinite(self.ranking)
        out = np.full(self.n, np.nan)
        if not finite.any():
            return out
        low = self.ranking[finite].min()
        span = self.ranking[finite].max() - low
        out[finite] = (self.ranking[finite] - low) / span if span > 0 else 0.0
        return out
