"""Configuration defaults, environment and scheduling helpers."""
