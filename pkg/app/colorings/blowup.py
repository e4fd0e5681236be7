"""Recursive blow-up of a base coloring.

A range of s vertices is split into p = min(s, base.n) contiguous parts whose
sizes differ by at most one, larger parts first. Part i stands for base
vertex i: every edge between parts i and j takes the base color of (i, j).
Each part of size >= 2 is then colored the same way. When s < base.n the
parts are singletons and the range gets the base coloring restricted to its
first s vertices.
"""

from __future__ import annotations

import logging
from typing import List

import numpy as np

from errors import DomainError

from .coloring import COLOR_DTYPE, EdgeColoring, pair_arrays

logger = logging.getLogger(__name__)


def part_sizes(size: int, parts: int) -> List[int]:
    q, rem = divmod(size, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def blow_up(base: EdgeColoring, n: int) -> EdgeColoring:
    if n < base.n:
        raise DomainError(f"blow-up target n={n} is smaller than the base K_{base.n}")
    matrix = np.full((n, n), -1, dtype=COLOR_DTYPE)
    pending = [(0, n)]
    while pending:
        lo, hi = pending.pop()
        size = hi - lo
        parts = min(size, base.n)
        sizes = part_sizes(size, parts)
        labels = np.repeat(np.arange(parts), sizes)
        matrix[lo:hi, lo:hi] = base.matrix[np.ix_(labels, labels)]
        start = lo
        for part in sizes:
            if part >= 2:
                pending.append((start, start + part))
            start += part
    iu, ju = pair_arrays(n)
    logger.info("Blow-up: base n=%s r=%s -> n=%s", base.n, base.r, n)
    return EdgeColoring(n=n, r=base.r, colors=matrix[iu, ju])
