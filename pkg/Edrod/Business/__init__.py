"""Orchestration: cached workspaces and experiment runs."""
