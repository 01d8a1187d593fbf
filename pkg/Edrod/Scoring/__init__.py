"""Local entropy and EDR scoring."""
