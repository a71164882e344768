"""
Bounded fan-out of independent checks.

Results are returned in input order, so every report assembled from them is
independent of the number of threads and of completion order.
"""
import asyncio
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

from lie2weyl.utils.config import config

T = TypeVar("T")
R = TypeVar("R")


async def _gather(fn: Callable[[T], R], items: List[T], threads: int) -> List[R]:
    semaphore = asyncio.Semaphore(threads)

    async def run(item: T) -> R:
        async with semaphore:
            return await asyncio.to_thread(fn, item)

    return await asyncio.gather(*(run(item) for item in items))


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Apply fn to every item, using up to `threads` worker threads.

    Args:
        fn: Pure function of one item
        items: Items to process
        threads: Worker count; defaults to the runtime config, values <= 1 run inline

    Returns:
        List[R]: Results in the order of `items`
    """
    work = list(items)
    workers = config.runtime.threads if threads is None else threads
    if workers <= 1 or len(work) <= 1:
        return [fn(item) for item in work]

    logger.debug(f"Fanning out {len(work)} tasks over {workers} threads")
    return asyncio.run(_gather(fn, work, workers))
