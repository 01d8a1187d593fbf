"""Nearest-neighbor selection."""
