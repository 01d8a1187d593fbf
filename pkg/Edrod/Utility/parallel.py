"""
Row-block scheduling for the O(n^2) passes.

Block boundaries depend only on the problem shape, never on the thread count,
and every block writes a disjoint slice of the output, so a run with 8 threads
is bit-identical to a run with 1.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple
import logging

from Edrod.Utility.Defaults import BLOCK_ELEMENT_BUDGET

logger = logging.getLogger(__name__)

Block = Tuple[int, int]


def row_blocks(n_rows: int, elements_per_row: int, budget: int = BLOCK_ELEMENT_BUDGET) -> List[Block]:
    rows = max(1, min(n_rows, budget // max(1, elements_per_row)))
    return [(start, min(start + rows, n_rows)) for start in range(0, n_rows, rows)]


def run_blocks(work: Callable[[int, int], None], blocks: List[Block], threads: int = 1) -> None:
    """Call `work(start, stop)` for every block, in a thread pool when threads > 1."""
    logger.debug("Scheduling %d row blocks on %d thread(s)", len(blocks), threads)
    if threads <= 1 or len(blocks) == 1:
        for start, stop in blocks:
            work(start, stop)
        return
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(work, start, stop) for start, stop in blocks]
        for future in futures:
            # re-raises the first worker error
            future.result()


