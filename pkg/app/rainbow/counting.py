"""Rainbow copy counting.

Copies are enumerated as (sorted m-subset, embedding pattern) pairs: every
m-subset of K_n carries m!/|Aut(H)| distinct copies of H, one per row of
``embedding_patterns(H)``. Subsets are streamed in numpy batches grouped by
their smallest vertex; the groups are the units handed to parallel workers.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import chain, combinations, islice
from typing import Iterator, Optional, Sequence

import numpy as np

from colorings import EdgeColoring, pair_index_matrix
from config import get_settings
from errors import CountOverflowError, DomainError
from graphs import Graph, copies_in_complete, embedding_patterns

logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1


def combination_array(pool: Sequence[int], size: int) -> np.ndarray:
    """All size-subsets of pool, one per row, in lexicographic order."""
    if size == 0:
        return np.zeros((1, 0), dtype=np.int64)
    flat = np.fromiter(chain.from_iterable(combinations(pool, size)), dtype=np.int64)
    return flat.reshape(-1, size)


def rainbow_mask(colors: np.ndarray) -> np.ndarray:
    """True where the colors along the last axis are pairwise distinct."""
    ordered = np.sort(colors, axis=-1)
    return np.all(ordered[..., 1:] != ordered[..., :-1], axis=-1)


def _subset_batches(n: int, m: int, first: int, batch: int) -> Iterator[np.ndarray]:
    rest = combinations(range(first + 1, n), m - 1)
    while True:
        flat = np.fromiter(chain.from_iterable(islice(rest, batch)), dtype=np.int64)
        if not flat.size:
            return
        tail = flat.reshape(-1, m - 1)
        head = np.full((tail.shape[0], 1), first, dtype=np.int64)
        yield np.hstack((head, tail))


def _count_from_vertex(args) -> int:
    matrix, patterns, n, m, first, batch = args
    total = 0
    left = patterns[..., 0]
    right = patterns[..., 1]
    for subsets in _subset_batches(n, m, first, batch):
        colors = matrix[subsets[:, left], subsets[:, right]]
        total += int(np.count_nonzero(rainbow_mask(colors)))
    return total


def count_rainbow_copies(graph: Graph, coloring: EdgeColoring, workers: Optional[int] = None) -> int:
    if coloring.n < graph.m:
        raise DomainError(f"K_{coloring.n} is too small for a pattern on {graph.m} vertices")
    total_copies = copies_in_complete(graph, coloring.n)
    if total_copies > INT64_MAX:
        raise CountOverflowError(f"{total_copies} copies of {graph.label()} exceed the 64-bit count range")
    if graph.e <= 1:
        return total_copies
    if graph.e > coloring.r:
        return 0

    settings = get_settings()
    workers = workers or settings.workers
    patterns = embedding_patterns(graph)
    batch = max(1, settings.chunk_size // len(patterns))
    n, m = coloring.n, graph.m
    jobs = [(coloring.matrix, patterns, n, m, first, batch) for first in range(n - m + 1)]
    logger.info(
        "Counting rainbow %s in K_%s: r=%s patterns=%s workers=%s",
        graph.label(), n, coloring.r, len(patterns), workers,
    )
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            count = sum(pool.map(_count_from_vertex, jobs))
    else:
        count = sum(_count_from_vertex(job) for job in jobs)
    logger.info("Rainbow count: %s of %s copies", count, total_copies)
    return count


def rainbow_fraction(graph: Graph, coloring: EdgeColoring) -> Fraction:
    return Fraction(count_rainbow_copies(graph, coloring), copies_in_complete(graph, coloring.n))


def all_copies(graph: Graph, n: int) -> np.ndarray:
    """Pair indices of every copy of the pattern in K_n, shape (copies, e)."""
    if n < graph.m:
        raise DomainError(f"K_{n} is too small for a pattern on {graph.m} vertices")
    patterns = embedding_patterns(graph)
    subsets = combination_array(range(n), graph.m)
    index = pair_index_matrix(n)
    copies = index[subsets[:, patterns[..., 0]], subsets[:, patterns[..., 1]]]
    return copies.reshape(subsets.shape[0] * len(patterns), graph.e)


def copies_through_pair(graph: Graph, n: int, u: int, v: int) -> np.ndarray:
    """Pair indices of the copies that use the edge {u, v}, shape (k, e)."""
    patterns = embedding_patterns(graph)
    index = pair_index_matrix(n)
    target = index[u, v]
    others = [w for w in range(n) if w != u and w != v]
    rest = combination_array(others, graph.m - 2)
    ends = np.full((rest.shape[0], 2), (u, v), dtype=np.int64)
    subsets = np.sort(np.hstack((ends, rest)), axis=1)
    copies = index[subsets[:, patterns[..., 0]], subsets[:, patterns[..., 1]]].reshape(
        rest.shape[0] * len(patterns), graph.e
    )
    return copies[np.any(copies == target, axis=1)]
