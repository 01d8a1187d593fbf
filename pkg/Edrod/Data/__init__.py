"""Dataset generation and file I/O."""
