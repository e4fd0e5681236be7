from __future__ import annotations

import logging
from typing import Iterable, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from bounds import elementary_symmetric
from colorings import EdgeColoring, pair_arrays
from errors import DomainError

logger = logging.getLogger(__name__)


class ColorDegreeProfile(BaseModel):
    """Per-color counts of the edges joining a center set to the rest of K_n."""

    model_config = ConfigDict(frozen=True)

    n: int
    center_set: Tuple[int, ...]
    q: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.center_set)

    def rainbow_star_count(self, leaves: int) -> int:
        """Elementary symmetric sum of degree ``leaves`` over q."""
        return int(elementary_symmetric(self.q, leaves))


def color_degree_profile(coloring: EdgeColoring, centers: Iterable[int]) -> ColorDegreeProfile:
    chosen = sorted(set(int(v) for v in centers))
    if not chosen:
        raise DomainError("center set must be nonempty")
    bad = [v for v in chosen if not 0 <= v < coloring.n]
    if bad:
        raise DomainError(f"vertex {bad[0]} is not in K_{coloring.n}")
    inside = np.zeros(coloring.n, dtype=bool)
    inside[chosen] = True
    iu, ju = pair_arrays(coloring.n)
    crossing = inside[iu] ^ inside[ju]
    q = np.bincount(coloring.colors[crossing], minlength=coloring.r)
    return ColorDegreeProfile(n=coloring.n, center_set=tuple(chosen), q=tuple(int(x) for x in q))


def star_count_from_profiles(coloring: EdgeColoring, m: int) -> int:
    """Rainbow K_{1,m-1} copies summed over single-vertex centers.

    Equals the direct count for m >= 3; for m = 2 each edge is seen from both ends.
    """
    total = sum(color_degree_profile(coloring, [v]).rainbow_star_count(m - 1) for v in range(coloring.n))
    logger.debug("Star count via profiles: n=%s m=%s total=%s", coloring.n, m, total)
    return total
