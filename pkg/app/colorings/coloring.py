from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence, Tuple

import numpy as np

from errors import DomainError

logger = logging.getLogger(__name__)

COLOR_DTYPE = np.int32


@lru_cache(maxsize=32)
def pair_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Endpoints (u, v), u < v, of every pair of K_n in row-major upper-triangular order."""
    iu, ju = np.triu_indices(n, k=1)
    iu.setflags(write=False)
    ju.setflags(write=False)
    return iu, ju


@lru_cache(maxsize=32)
def pair_index_matrix(n: int) -> np.ndarray:
    """n x n matrix holding the pair index of (u, v); -1 on the diagonal."""
    iu, ju = pair_arrays(n)
    index = np.full((n, n), -1, dtype=np.int64)
    index[iu, ju] = np.arange(iu.size)
    index[ju, iu] = np.arange(iu.size)
    index.setflags(write=False)
    return index


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """An r-edge-coloring of K_n stored as a dense upper-triangular color array."""

    n: int
    r: int
    colors: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"host graph needs n >= 2, got {self.n}")
        if self.r < 1:
            raise DomainError(f"need at least one color, got r={self.r}")
        colors = np.array(self.colors, dtype=COLOR_DTYPE).reshape(-1)
        expected = self.n * (self.n - 1) // 2
        if colors.size != expected:
            raise DomainError(f"K_{self.n} has {expected} edges, got {colors.size} colors")
        if colors.size and (colors.min() < 0 or colors.max() >= self.r):
            raise DomainError(f"colors must lie in 0..{self.r - 1}")
        colors.setflags(write=False)
        object.__setattr__(self, "colors", colors)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Symmetric n x n color matrix, -1 on the diagonal."""
        iu, ju = pair_arrays(self.n)
        matrix = np.full((self.n, self.n), -1, dtype=COLOR_DTYPE)
        matrix[iu, ju] = self.colors
        matrix[ju, iu] = self.colors
        matrix.setflags(write=False)
        return matrix

    def color(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"({u}, {v}) is not an edge of K_{self.n}")
        return int(self.matrix[u, v])

    def with_colors(self, colors: np.ndarray) -> "EdgeColoring":
        return EdgeColoring(n=self.n, r=self.r, colors=colors)

    def relabel_colors(self, perm: Sequence[int]) -> "EdgeColoring":
        """Apply the color permutation c -> perm[c]."""
        table = np.asarray(perm, dtype=COLOR_DTYPE)
        if sorted(table.tolist()) != list(range(self.r)):
            raise DomainError(f"{list(perm)} is not a permutation of 0..{self.r - 1}")
        return self.with_colors(table[self.colors])

    def relabel_vertices(self, perm: Sequence[int]) -> "EdgeColoring":
        """Coloring in which pair (perm[u], perm[v]) takes the color of (u, v)."""
        order = np.asarray(perm, dtype=np.int64)
        if sorted(order.tolist()) != list(range(self.n)):
            raise DomainError(f"{list(perm)} is not a permutation of 0..{self.n - 1}")
        inverse = np.empty_like(order)
        inverse[order] = np.arange(self.n)
        matrix = self.matrix[np.ix_(inverse, inverse)]
        iu, ju = pair_arrays(self.n)
        return self.with_colors(matrix[iu, ju])

    def restrict(self, vertices: Sequence[int]) -> "EdgeColoring":
        """Induced coloring on the given vertices, relabeled 0..k-1 in the given order."""
        chosen = np.asarray(vertices, dtype=np.int64)
        sub = self.matrix[np.ix_(chosen, chosen)]
        iu, ju = pair_arrays(chosen.size)
        return EdgeColoring(n=int(chosen.size), r=self.r, colors=sub[iu, ju])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.n == other.n and self.r == other.r and np.array_equal(self.colors, other.colors)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.colors.tobytes()))


def make_generator(seed: int) -> np.random.Generator:
    """PCG64 generator; the seed is reduced modulo 2**64."""
    return np.random.Generator(np.random.PCG64(seed % 2**64))


def random_coloring(n: int, r: int, seed: int) -> EdgeColoring:
    if n < 2 or r < 1:
        raise DomainError(f"random coloring needs n >= 2 and r >= 1, got n={n} r={r}")
    rng = make_generator(seed)
    colors = rng.integers(0, r, size=n * (n - 1) // 2, dtype=np.int64)
    logger.debug("Random coloring: n=%s r=%s seed=%s", n, r, seed)
    return EdgeColoring(n=n, r=r, colors=colors)
