"""Exhaustive maximisation of rainbow copies over all r-colorings of K_n.

Colorings are enumerated in lexicographic order of their color arrays. With
color-symmetry pruning only restricted growth strings are visited: the first
edge takes color 0 and each later edge uses at most one color beyond those
already present. Rainbow counts are invariant under relabeling colors, so
every orbit keeps its lexicographically smallest member and the maximum is
unchanged. The witness is the first coloring reaching the maximum.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from itertools import chain, islice, product
from typing import Iterator, Optional, Tuple

import numpy as np

from colorings import EdgeColoring
from config import get_settings
from errors import BudgetExceededError, DomainError
from graphs import Graph, copies_in_complete
from rainbow import all_copies, rainbow_mask

from .result import SearchResult

logger = logging.getLogger(__name__)


def growth_strings(length: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Color arrays with first entry 0 and colors introduced in increasing order."""
    word = [0] * length

    def extend(pos: int, top: int) -> Iterator[Tuple[int, ...]]:
        if pos == length:
            yield tuple(word)
            return
        for color in range(min(top + 2, r)):
            word[pos] = color
            yield from extend(pos + 1, max(top, color))

    yield from extend(1, 0)


def leaf_estimate(n: int, r: int, prune: bool) -> int:
    leaves = r ** (n * (n - 1) // 2)
    if prune:
        return math.ceil(Fraction(leaves, math.factorial(r)))
    return leaves


def exact_rb(
    graph: Graph,
    n: int,
    r: int,
    prune: bool = True,
    budget: Optional[int] = None,
) -> SearchResult:
    if n < graph.m:
        raise DomainError(f"K_{n} is too small for a pattern on {graph.m} vertices")
    if n < 2 or r < 1:
        raise DomainError(f"exhaustive search needs n >= 2 and r >= 1, got n={n} r={r}")
    settings = get_settings()
    budget = settings.exact_budget if budget is None else budget
    estimate = leaf_estimate(n, r, prune)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)

    edges = n * (n - 1) // 2
    total = copies_in_complete(graph, n)
    copies = all_copies(graph, n)
    leaves = growth_strings(edges, r) if prune else product(range(r), repeat=edges)
    batch = max(1, settings.chunk_size // max(1, copies.size))
    logger.info(
        "Exhaustive rb: graph=%s n=%s r=%s prune=%s estimate=%s",
        graph.label(), n, r, prune, estimate,
    )

    best_value = -1
    best_colors: Optional[np.ndarray] = None
    evaluations = 0
    while True:
        flat = np.fromiter(chain.from_iterable(islice(leaves, batch)), dtype=np.int32)
        if not flat.size:
            break
        block = flat.reshape(-1, edges)
        counts = np.count_nonzero(rainbow_mask(block[:, copies]), axis=1)
        top = int(np.argmax(counts))
        if counts[top] > best_value:
            best_value = int(counts[top])
            best_colors = block[top].copy()
        evaluations += block.shape[0]

    witness = EdgeColoring(n=n, r=r, colors=best_colors)
    logger.info("Exhaustive rb: value=%s of %s copies after %s colorings", best_value, total, evaluations)
    return SearchResult(
        value=best_value,
        exact=True,
        witness=witness,
        fraction=Fraction(best_value, total),
        evaluations=evaluations,
    )
