"""Environment helpers (.env loading, thread count resolution)."""
import os
import logging
from typing import Optional

from dotenv import load_dotenv

from Edrod.Utility.Defaults import ENV_THREADS

logger = logging.getLogger(__name__)


def load_env_file(filepath: str = ".env") -> None:
    if not os.path.exists(filepath):
        logger.debug(".env file not found: %s", filepath)
        return
    # never overrides variables already set in the process environment
    load_dotenv(filepath, override=False)


def resolve_threads(cli_value: Optional[int] = None) -> int:
    """--threads wins, then EDROD_THREADS, then 1."""
    if cli_value is not None:
        if cli_value < 1:
            raise ValueError("--threads must be at least 1")
        return cli_value
    raw = os.environ.get(ENV_THREADS)
    if not raw:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_THREADS} must be an integer, got {raw!r}")
    if threads < 1:
        raise ValueError(f"{ENV_THREADS} must be at least 1, got {threads}")
    return threads
