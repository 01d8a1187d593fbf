"""AUC, coloring and parameter sweeps."""
