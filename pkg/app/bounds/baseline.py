from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterable, Tuple

from errors import DomainError
from graphs import Graph

logger = logging.getLogger(__name__)


def random_baseline(e: int, r: int) -> Fraction:
    """Probability that e edges colored uniformly from r colors are rainbow: binom(r,e)·e!/r^e."""
    if e < 0 or r < 1:
        raise DomainError(f"baseline needs e >= 0 and r >= 1, got e={e} r={r}")
    return Fraction(math.perm(r, e), r**e)


def recoloring_lower_bound(rb_next: int, r: int, e: int) -> Fraction:
    """Lower bound on rb_r from rb_{r+1} by merging one color class into the others."""
    if r < 1 or e < 0 or rb_next < 0:
        raise DomainError(f"recoloring bound needs r >= 1, e >= 0, rb >= 0; got r={r} e={e} rb={rb_next}")
    if r + 1 - e <= 0:
        return Fraction(0)
    factor = Fraction((r + e) * (r + 1 - e), r * (r + 1))
    return factor * rb_next


def monotonicity_check(graph: Graph, values: Iterable[Tuple[int, int]]) -> bool:
    """Check (n - m)·rb(n) <= n·rb(n - 1) for consecutive exact values."""
    rows = list(values)
    for (n_prev, _), (n_next, _) in zip(rows, rows[1:]):
        if n_next != n_prev + 1:
            raise DomainError(f"values must cover consecutive n; gap between {n_prev} and {n_next}")
    for (n_prev, rb_prev), (n_next, rb_next) in zip(rows, rows[1:]):
        if (n_next - graph.m) * rb_next > n_next * rb_prev:
            logger.warning("Monotonicity violated for %s between n=%s and n=%s", graph.label(), n_prev, n_next)
            return False
    return True
