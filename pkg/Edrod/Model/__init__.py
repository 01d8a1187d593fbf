"""Domain types, one dataclass per module."""
