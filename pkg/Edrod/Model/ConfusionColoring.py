from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

import numpy as np


class Color(str, Enum):
    GREEN = "green"    # true negative
    YELLOW = "yellow"  # true positive
    PURPLE = "purple"  # false positive
    RED = "red"        # false negative


"""Four-color classification of samples after flagging the top-N scores."""
@dataclass(frozen=True)
class ConfusionColoring:
    green: int
    yellow: int
    purple: int
    red: int
    per_sample: np.ndarray
    top_n: int

    def counts(self) -> Dict[str, Any]:
        return {
            "top_n": self.top_n,
            "green": self.green,
            "yellow": self.yellow,
            "purple": self.purple,
            "red": self.red,
        }
