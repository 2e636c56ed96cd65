from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Sequence, TypeVar

__all__ = ("groupby", "pool_map", "parse_int_list")

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger("hypconst")


def groupby(iterable: Sequence[Any], count: int) -> list[list[Any]]:
    return [list(iterable[i : i + count]) for i in range(0, len(iterable), count)]


def _run_batch(func: Callable[[T], R], batch: list[T]) -> list[R]:
    return [func(item) for item in batch]


def pool_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """Maps func over items, in worker processes when jobs > 1.

    Results come back in input order whatever the worker count, func must be a module level function.
    """
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]

    batches = groupby(items, max(1, len(items) // (jobs * 4)))
    logger.debug("dispatching %d items in %d batches to %d workers", len(items), len(batches), jobs)

    results: list[R] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(_run_batch, [func] * len(batches), batches):
            results.extend(batch)

    return results


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parses "1,2,3" into (1, 2, 3)."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"not a comma separated list of integers: {text!r}") from None
