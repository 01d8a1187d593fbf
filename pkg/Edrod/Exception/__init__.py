"""Error hierarchy raised by the library and mapped to exit codes by the CLI."""
