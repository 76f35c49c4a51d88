import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """Apply `fn` to every item, in a process pool when jobs > 1.

    Results come back in input order whatever the worker count, so callers
    that merge them get identical output for every `jobs`.

    Args:
        fn: A module-level (picklable) function
        items: Work items
        jobs: Worker processes; 1 runs in-process

    Returns:
        list: fn(item) for each item, in order
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    workers = min(jobs, len(items))
    logger.debug(f"Dispatching {len(items)} items to {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
