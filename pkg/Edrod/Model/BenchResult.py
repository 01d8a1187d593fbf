from dataclasses import dataclass
from typing import Any, Dict, Tuple

"""Scorer runtime across sample sizes with the fitted log-log exponent."""
@dataclass(frozen=True)
class BenchResult:
    n_grid: Tuple[int, ...]
    seconds: Tuple[float, ...]
    dimension: int
    exponent: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": list(self.n_grid),
            "seconds": list(self.seconds),
            "d": self.dimension,
            "exponent": self.exponent,
        }
