from dataclasses import dataclass, asdict
from typing import Any, Dict

"""Rank-based ROC-AUC with the class counts it was computed from."""
@dataclass(frozen=True)
class AucResult:
    auc: float
    n_pos: int
    n_neg: int
    tie_adjusted: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
