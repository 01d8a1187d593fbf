from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from Edrod.Model.DetectorSpec import DetectorSpec
from Edrod.Model.SyntheticSpec import SyntheticSpec

"""Fully resolved command-line run."""
@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    detector: DetectorSpec
    input_path: Optional[str] = None
    synthetic: Optional[SyntheticSpec] = None
    output_path: Optional[str] = None
    output_format: str = "csv"
    seed: int = 42
    k_grid: Tuple[int, ...] = ()
    h_grid: Tuple[float, ...] = ()
    n_grid: Tuple[int, ...] = ()
    top_n: Optional[int] = None
    instances: int = 1
    label_column: Optional[str] = None
    has_header: bool = True
    ignore_labels: bool = False
    explain: Optional[int] = None
    repeats: int = 3
    # execution-only, never serialized into artifacts
    threads: int = field(default=1, compare=False)

    def _detector_header(self) -> Dict[str, Any]:
        detector = self.detector.to_dict()
        if self.subcommand == "compare":
            # compare uses the per-method default distance and names every method in its rows
            del detector["distance"]
            del detector["method"]
        return detector

    def to_header(self) -> Dict[str, Any]:
        """Everything that determines artifact content, in a stable key order."""
        header: Dict[str, Any] = {
            "subcommand": self.subcommand,
            "detector": self._detector_header(),
            "input": self.input_path,
            "synthetic": self.synthetic.to_dict() if self.synthetic else None,
            "format": self.output_format,
            "seed": self.seed,
        }
        if self.k_grid:
            header["k_grid"] = list(self.k_grid)
        if self.h_grid:
            header["h_grid"] = list(self.h_grid)
        if self.n_grid:
            header["n_grid"] = list(self.n_grid)
        if self.top_n is not None:
            header["top_n"] = self.top_n
        if self.instances != 1:
            header["instances"] = self.instances
        if self.input_path:
            header["label_column"] = self.label_column
            header["has_header"] = self.has_header
            if self.ignore_labels:
                header["ignore_labels"] = True
        return header
