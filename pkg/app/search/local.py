"""Seeded local search for colorings with many rainbow copies.

Moves recolor a single edge. The count change of a move is evaluated on the
copies through the mutated edge only; those copy lists are built lazily per
edge and cached for the lifetime of one search.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from colorings import EdgeColoring, pair_arrays
from config import get_settings
from errors import DomainError
from graphs import Graph, copies_in_complete
from rainbow import copies_through_pair, count_rainbow_copies, rainbow_mask
from schemas import SearchParams

from .result import SearchResult, best_of

logger = logging.getLogger(__name__)


class IncrementalCounter:
    """Rainbow count deltas for single-edge recolorings of K_n."""

    def __init__(self, graph: Graph, n: int) -> None:
        self.graph = graph
        self.n = n
        self._iu, self._ju = pair_arrays(n)
        self._through: Dict[int, np.ndarray] = {}

    def through(self, edge: int) -> np.ndarray:
        rows = self._through.get(edge)
        if rows is None:
            rows = copies_through_pair(self.graph, self.n, int(self._iu[edge]), int(self._ju[edge]))
            self._through[edge] = rows
        return rows

    def delta(self, colors: np.ndarray, edge: int, new_color: int) -> int:
        """Change in the rainbow count if ``edge`` took ``new_color``; ``colors`` is left as it was."""
        rows = self.through(edge)
        old_color = colors[edge]
        before = np.count_nonzero(rainbow_mask(colors[rows]))
        colors[edge] = new_color
        after = np.count_nonzero(rainbow_mask(colors[rows]))
        colors[edge] = old_color
        return int(after - before)


def _greedy(counter: IncrementalCounter, colors: np.ndarray, r: int, iterations: int, value: int):
    edges = colors.size
    candidates = edges * (r - 1)
    cursor = 0
    stale = 0
    used = 0
    while used < iterations and stale < candidates:
        edge, offset = divmod(cursor, r - 1)
        new_color = offset if offset < colors[edge] else offset + 1
        cursor = (cursor + 1) % candidates
        used += 1
        delta = counter.delta(colors, edge, new_color)
        if delta > 0:
            colors[edge] = new_color
            value += delta
            stale = 0
        else:
            stale += 1
    return colors, value, used


def _anneal(
    counter: IncrementalCounter,
    colors: np.ndarray,
    r: int,
    params: SearchParams,
    rng: np.random.Generator,
    value: int,
):
    best_value, best_colors = value, colors.copy()
    temperature = params.temperature
    edges = colors.size
    for _ in range(params.iterations):
        edge = int(rng.integers(edges))
        new_color = int(rng.integers(r - 1))
        if new_color >= colors[edge]:
            new_color += 1
        delta = counter.delta(colors, edge, new_color)
        if delta >= 0 or (temperature > 0 and rng.random() < math.exp(delta / temperature)):
            colors[edge] = new_color
            value += delta
            if value > best_value:
                best_value, best_colors = value, colors.copy()
        temperature *= params.cooling
    return best_colors, best_value, params.iterations


def _run_restart(
    graph: Graph,
    n: int,
    r: int,
    params: SearchParams,
    seed: np.random.SeedSequence,
    warm: Optional[EdgeColoring],
) -> SearchResult:
    rng = np.random.Generator(np.random.PCG64(seed))
    edges = n * (n - 1) // 2
    if warm is not None:
        colors = warm.colors.astype(np.int32)
    else:
        colors = rng.integers(0, r, size=edges).astype(np.int32)
    start = EdgeColoring(n=n, r=r, colors=colors)
    value = count_rainbow_copies(graph, start, workers=1)
    used = 0
    if r > 1 and params.iterations > 0:
        counter = IncrementalCounter(graph, n)
        if params.acceptance == "greedy":
            colors, value, used = _greedy(counter, colors, r, params.iterations, value)
        else:
            colors, value, used = _anneal(counter, colors, r, params, rng, value)
    witness = EdgeColoring(n=n, r=r, colors=colors)
    logger.debug("Restart finished: value=%s moves=%s", value, used)
    return SearchResult(
        value=value,
        exact=False,
        witness=witness,
        fraction=Fraction(value, copies_in_complete(graph, n)),
        evaluations=used + 1,
    )


def local_search(
    graph: Graph,
    n: int,
    r: int,
    params: Optional[SearchParams] = None,
    warm: Optional[EdgeColoring] = None,
    workers: Optional[int] = None,
) -> SearchResult:
    if n < graph.m:
        raise DomainError(f"K_{n} is too small for a pattern on {graph.m} vertices")
    if n < 2 or r < 1:
        raise DomainError(f"local search needs n >= 2 and r >= 1, got n={n} r={r}")
    if warm is not None and (warm.n != n or warm.r > r):
        raise DomainError(f"warm start is an {warm.r}-coloring of K_{warm.n}, expected at most {r} colors on K_{n}")
    params = params or SearchParams.from_settings()
    workers = workers or get_settings().workers
    seeds = np.random.SeedSequence(params.seed % 2**64).spawn(params.restarts)
    logger.info(
        "Local search: graph=%s n=%s r=%s restarts=%s iterations=%s acceptance=%s seed=%s warm=%s",
        graph.label(), n, r, params.restarts, params.iterations, params.acceptance, params.seed, warm is not None,
    )
    args = [(graph, n, r, params, seed, warm) for seed in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results: List[SearchResult] = list(pool.map(_run_restart, *zip(*args)))
    else:
        results = [_run_restart(*arg) for arg in args]
    best = best_of(results)
    logger.info("Local search: best=%s fraction=%s", best.value, best.fraction)
    return best
