# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from typing import (Callable, List, Optional, Sequence, TypeVar)

from .config import get_settings


T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int]) -> int:
    r"""
    Explicit worker count, else the global setting; never below `1`.
    """
    if workers is None:
        workers = get_settings().workers
    return max(int(workers), 1)


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    workers: Optional[int] = None
) -> List[R]:
    r"""
    Apply :param:`func` to every item, returning the results in input order.

    Parameters
    ----------
        func : Callable[[T], R]
            A picklable (module-level) function.

        items : Sequence[T]
            The work items. They must be picklable when more than one worker is used.

        workers : Optional[int], default to `None`
            Number of worker processes.
            - `None`: Use :attr:`Settings.workers`;
            - `1` or fewer: Run in the calling process.

    Returns
    -------
        List[R]
            One result per item, in the order of :param:`items`.
    """
    used = min(resolve_workers(workers), len(items))
    if used <= 1:
        return [func(item) for item in items]

    chunksize = max(len(items) // (used * 4), 1)
    with ProcessPoolExecutor(max_workers=used) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
