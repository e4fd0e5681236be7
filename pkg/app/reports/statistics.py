from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from bounds import random_baseline
from colorings import EdgeColoring
from errors import DomainError
from graphs import Graph, copies_in_complete
from rainbow import count_rainbow_copies

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonteCarloEstimate:
    samples: int
    mean: float
    stderr: float
    baseline: Fraction
    fractions: np.ndarray


def monte_carlo_fraction(graph: Graph, n: int, r: int, seed: int, samples: int) -> MonteCarloEstimate:
    """Mean rainbow fraction over independent uniformly random r-colorings of K_n."""
    if samples < 1:
        raise DomainError(f"need at least one sample, got {samples}")
    if n < max(2, graph.m) or r < 1:
        raise DomainError(f"Monte Carlo needs n >= max(2, m) and r >= 1, got n={n} r={r}")
    total = copies_in_complete(graph, n)
    edges = n * (n - 1) // 2
    streams = np.random.SeedSequence(seed % 2**64).spawn(samples)
    fractions = np.empty(samples, dtype=np.float64)
    for i, stream in enumerate(streams):
        rng = np.random.Generator(np.random.PCG64(stream))
        coloring = EdgeColoring(n=n, r=r, colors=rng.integers(0, r, size=edges))
        fractions[i] = count_rainbow_copies(graph, coloring) / total
        logger.debug("Sample %s: fraction=%.6f", i, fractions[i])
    stderr = float(fractions.std(ddof=1) / np.sqrt(samples)) if samples > 1 else 0.0
    estimate = MonteCarloEstimate(
        samples=samples,
        mean=float(fractions.mean()),
        stderr=stderr,
        baseline=random_baseline(graph.e, r),
        fractions=fractions,
    )
    logger.info("Monte Carlo: samples=%s mean=%.6f stderr=%.6f", samples, estimate.mean, estimate.stderr)
    return estimate
