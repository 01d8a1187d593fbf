
"""Error hierarchy for the EDROD library and CLI."""
from typing import Optional


class EdrodError(Exception):
    """Base class for every library-level error.

    `location` pins the diagnostic to a place (a file row, a parameter name,
    a sample index) so the CLI can print a located message.
    """

    def __init__(self, message: str, location: Optional[str] = None):
        self.message = message
        self.location = location
        super().__init__(self.message)

    def diagnostic(self) -> str:
        if self.location:
            return f"{type(self).__name__} at {self.location}: {self.message}"
        return f"{type(self).__name__}: {self.message}"


class DatasetError(EdrodError):
    """Dataset invariant violated (shape, non-finite entries)."""


class DimensionError(EdrodError):
    """Vector or matrix dimensions do not line up."""


class DegenerateData(EdrodError):
    """Covariance cannot be made positive definite (e.g. all rows identical)."""


class InsufficientData(EdrodError):
    """Fewer samples than the operation needs."""


class BandwidthError(EdrodError):
    """Kernel width is not a positive finite real."""


class KInvalid(EdrodError):
    """Neighborhood size below 1."""


class KTooLarge(EdrodError):
    """Neighborhood size not smaller than the sample count."""


class SingleClassError(EdrodError):
    """Labels contain only one class, so AUC is undefined."""


class InvalidScores(EdrodError):
    """Scores contain NaN or +inf."""


class SpecError(EdrodError):
    """Inconsistent synthetic dataset specification."""


class ParseError(EdrodError):
    """Unparseable or non-finite entry in an input file."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        location = None
        if row is not None and column is not None:
            location = f"row {row}, column {column!r}"
        elif row is not None:
            location = f"row {row}"
        elif column is not None:
            location = f"column {column!r}"
        super().__init__(message, location)
        self.row = row
        self.column = column


class LabelError(EdrodError):
    """Label column holds values outside {0, 1}."""


class EmptyError(EdrodError):
    """Input file has no data rows."""


class EdrodIOError(EdrodError):
    """Reading or writing an artifact failed."""
