"""EDROD outlier detection: library and benchmark CLI."""

__version__ = "0.1.0"
