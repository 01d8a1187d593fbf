"""Run lifecycle events."""
