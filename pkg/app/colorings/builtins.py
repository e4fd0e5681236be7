from __future__ import annotations

import logging
import math
import re

import numpy as np

from errors import ColoringFormatError, DomainError

from .coloring import EdgeColoring, pair_arrays

logger = logging.getLogger(__name__)

# Vertices 0..4 on a cycle: the cycle edges and the diagonals each take colors 0..4.
FIG_K5_EDGES = {
    (0, 1): 0,
    (1, 2): 1,
    (2, 3): 2,
    (3, 4): 3,
    (0, 4): 4,
    (2, 4): 0,
    (0, 3): 1,
    (1, 4): 2,
    (0, 2): 3,
    (1, 3): 4,
}

_RAINBOW = re.compile(r"^rainbow:(\d+)$")


def is_builtin_name(name: str) -> bool:
    return name == "fig-k5" or bool(_RAINBOW.match(name))


def _fig_k5() -> EdgeColoring:
    iu, ju = pair_arrays(5)
    colors = [FIG_K5_EDGES[(int(u), int(v))] for u, v in zip(iu, ju)]
    return EdgeColoring(n=5, r=5, colors=np.array(colors))


def _rainbow_complete(a: int) -> EdgeColoring:
    if a < 2:
        raise DomainError(f"rainbow:{a} needs a >= 2")
    edges = math.comb(a, 2)
    return EdgeColoring(n=a, r=edges, colors=np.arange(edges))


def builtin_base_coloring(name: str) -> EdgeColoring:
    if name == "fig-k5":
        return _fig_k5()
    match = _RAINBOW.match(name)
    if match:
        return _rainbow_complete(int(match.group(1)))
    logger.warning("Unknown builtin coloring requested: %s", name)
    raise ColoringFormatError(f"unknown builtin coloring {name!r}; expected fig-k5 or rainbow:<a>")
