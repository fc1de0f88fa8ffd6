"""
Batch Service
Order-preserving batch evaluation of normal forms, equality and inversion
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache, partial
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from ..config import get_settings
from ..models import NormalForm, SignedWord
from .group_service import BraidGroupService, get_group_service
from .rewrite_service import RewriteEngine

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _resolve_workers(workers: Optional[int]) -> int:
    return max(1, workers if workers is not None else get_settings().WORKERS)


def map_in_pool(fn: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply fn to every item, in a process pool when workers > 1

    fn must be a module-level function. Results keep the input order.
    """
    count = _resolve_workers(workers)
    if count == 1 or len(items) < 2:
        return [fn(item) for item in items]

    chunksize = max(1, len(items) // (count * 4))
    logger.debug(f"Mapping {len(items)} items over {count} processes (chunks of {chunksize})")
    with ProcessPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


@lru_cache()
def _worker_group(step_guard: int) -> BraidGroupService:
    """Group service of a pool process, one per step guard"""
    return BraidGroupService(RewriteEngine(step_guard=step_guard))


def _normalize_item(step_guard: int, u: SignedWord) -> NormalForm:
    return _worker_group(step_guard).normal_form(u)


def _invert_item(step_guard: int, u: SignedWord) -> NormalForm:
    return _worker_group(step_guard).invert(u)


def _equal_item(step_guard: int, pair: Tuple[SignedWord, SignedWord]) -> bool:
    return _worker_group(step_guard).equal(*pair)


class BatchService:
    """
    Batch driver for the group operations

    Items are independent; with workers > 1 they are spread over a process
    pool and gathered back in input order. Pool processes rebuild the group
    service with the step guard of the injected engine.
    """

    def __init__(self, group: Optional[BraidGroupService] = None):
        self.group = group or get_group_service()

        logger.info("BatchService initialized")

    async def _run(
        self, fn: Callable[[int, T], R], items: Sequence[T], workers: Optional[int]
    ) -> List[R]:
        task = partial(fn, self.group.engine.step_guard)
        count = _resolve_workers(workers)
        if count == 1 or len(items) < 2:
            return [task(item) for item in items]

        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=count) as pool:
            futures = [loop.run_in_executor(pool, task, item) for item in items]
            return list(await asyncio.gather(*futures))

    async def normalize_batch(
        self, words: Sequence[SignedWord], workers: Optional[int] = None
    ) -> List[NormalForm]:
        """Normal form of every word, in input order"""
        logger.info(f"Normalizing batch of {len(words)} words")
        if _resolve_workers(workers) == 1:
            return [self.group.normal_form(u) for u in words]
        return await self._run(_normalize_item, words, workers)

    async def equal_batch(
        self, pairs: Sequence[Tuple[SignedWord, SignedWord]], workers: Optional[int] = None
    ) -> List[bool]:
        """Equality verdict of every pair, in input order"""
        logger.info(f"Comparing batch of {len(pairs)} pairs")
        if _resolve_workers(workers) == 1:
            return [self.group.equal(u, v) for u, v in pairs]
        return await self._run(_equal_item, pairs, workers)

    async def invert_batch(
        self, words: Sequence[SignedWord], workers: Optional[int] = None
    ) -> List[NormalForm]:
        logger.info(f"Inverting batch of {len(words)} words")
        if _resolve_workers(workers) == 1:
            return [self.group.invert(u) for u in words]
        return await self._run(_invert_item, words, workers)


# Global service instance
_batch_service = None


def get_batch_service() -> BatchService:
    """Get global batch service instance"""
    global _batch_service
    if _batch_service is None:
        _batch_service = BatchService()
    return _batch_service
