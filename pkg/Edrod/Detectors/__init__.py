"""Anomaly detectors: EDROD and the comparison baselines."""
