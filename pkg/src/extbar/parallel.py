"""Deterministic helpers for the optional thread pool.

``EXTBAR_THREADS`` caps the worker count (default 1, i.e. plain loops).
Results are always merged in input order, so enabling threads never changes
output bytes.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    raw = os.environ.get("EXTBAR_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"EXTBAR_THREADS must be an integer, got {raw!r}")
    return max(n, 1)


def map_ordered(fn: Callable[[T], R], items: Sequence[T]) -> List[R]:
    """Apply ``fn`` to each item, in parallel if configured; results keep
    the input order."""
    workers = thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
