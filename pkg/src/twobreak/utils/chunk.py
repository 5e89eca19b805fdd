"""Split work items into batches for a process pool."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from typing import TypeVar

T = TypeVar("T")

__all__ = ["batch_size_for", "chunked", "spread"]


def chunked(items: Sequence[T], size: int) -> Iterator[list[T]]:
    """Yield consecutive slices of at most ``size`` items, keeping their order."""

    if size <= 0:
        msg = "Parti boyutu pozitif olmalı."
        raise ValueError(msg)
    for start in range(0, len(items), size):
        yield list(items[start : start + size])


def batch_size_for(total: int, workers: int, *, batches_per_worker: int = 4) -> int:
    """Pick a batch size so every worker receives a few batches of ``total`` items."""

    if workers <= 0:
        msg = "İşçi sayısı pozitif olmalı."
        raise ValueError(msg)
    if total <= 0:
        return 1
    return max(1, -(-total // (workers * batches_per_worker)))


def spread(items: Sequence[T], workers: int) -> list[list[T]]:
    """Batches for ``workers`` processes; flattening them gives ``items`` back in order."""

    return list(chunked(items, batch_size_for(len(items), workers)))
