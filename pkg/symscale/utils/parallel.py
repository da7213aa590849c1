"""
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from math import ceil
from typing import Callable, Iterator, List, Optional, Sequence, TypeVar

# third-party imports
from joblib import delayed, Parallel


T = TypeVar('T')
R = TypeVar('R')


def chunk_bounds(n_items: int, n_jobs: int = 1, batches_per_job: int = 10) -> List[range]:
    """
    Split ``range(n_items)`` into contiguous chunks, about
    ``batches_per_job`` per worker.
    """
    if n_items == 0:
        return []
    chunk_size = max(1, int(ceil(n_items / (batches_per_job * max(n_jobs, 1)))))
    return [range(start, min(start + chunk_size, n_items)) for start in range(0, n_items, chunk_size)]


def parallel_chunks(
    func: Callable[[Sequence[T]], R],
    items: Sequence[T],
    n_jobs: int = 1,
    batches_per_job: int = 10,
    prefer: Optional[str] = None,
) -> Iterator[R]:
    """
    Apply ``func`` to contiguous chunks of ``items`` with joblib, yielding the
    per-chunk results in input order.

    Args:
        func:
            A picklable function taking a list of items.
        items (Sequence):
        n_jobs (int=1):
        batches_per_job (int=10):
        prefer (str=None):
            joblib backend hint; 'threads' for work that releases the GIL.

    Returns:
        A generator over chunk results, ordered like the input.
    """
    bounds = chunk_bounds(len(items), n_jobs, batches_per_job)
    parallel = Parallel(n_jobs=n_jobs, prefer=prefer, return_as='generator')
    return parallel(delayed(func)(list(items[b.start:b.stop])) for b in bounds)
