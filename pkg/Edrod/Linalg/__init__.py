"""Covariance estimation and distance computation."""
