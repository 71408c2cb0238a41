"""Evaluate a grid of points concurrently and return rows in grid order."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

P = TypeVar("P")
R = TypeVar("R")


def run_grid(points: Sequence[P], evaluate: Callable[[P], R], jobs: int = 1) -> list[R]:
    """evaluate(point) for every point; the result order matches ``points``."""

    def run(index: int) -> R:
        try:
            row = evaluate(points[index])
        except Exception:
            logger.exception("Grid point %d (%r) failed", index, points[index])
            raise
        logger.debug("grid point %d done: %r", index, points[index])
        return row

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, range(len(points))))
    return [run(i) for i in range(len(points))]
