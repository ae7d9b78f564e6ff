"""Order-preserving fan-out over worker processes."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("LOOPFORGE_THREADS", "1")))
    except ValueError:
        return 1


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> list[R]:
    """``list(map(func, items))``, optionally across processes. Results come
    back in input order, so merged output does not depend on ``threads``."""
    items = list(items)
    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def stripes(items: list, count: int) -> list[list]:
    """Split into ``count`` contiguous chunks (some may be empty)."""
    size, extra = divmod(len(items), count)
    out, start = [], 0
    for i in range(count):
        end = start + size + (1 if i < extra else 0)
        out.append(items[start:end])
        start = end
    return out
