from __future__ import annotations

import logging
import math
from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config import get_settings
from errors import DomainError, LimitError

from .families import closed_form_automorphisms, parse_graph_spec
from .graph import Edge, Graph

logger = logging.getLogger(__name__)


def _check_brute_force_limit(graph: Graph, what: str) -> None:
    limit = get_settings().max_brute_force_order
    if graph.m > limit:
        raise LimitError(f"{what} enumerates {graph.m}! permutations; limit is m <= {limit}")


@lru_cache(maxsize=256)
def brute_force_automorphisms(graph: Graph) -> int:
    """Count vertex permutations mapping the edge set onto itself."""
    _check_brute_force_limit(graph, "automorphism brute force")
    edge_set = frozenset(graph.edges)
    count = 0
    for perm in permutations(range(graph.m)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edge_set for u, v in graph.edges):
            count += 1
    return count


@lru_cache(maxsize=256)
def automorphism_count(graph: Graph) -> int:
    if graph.family is not None:
        closed = closed_form_automorphisms(graph.family)
        if closed is not None:
            return closed
    return brute_force_automorphisms(graph)


def _star_forest_images(m: int, parts: Sequence[int]) -> Iterator[List[Edge]]:
    """Edge sets of every copy of a disjoint union of stars on vertices 0..m-1.

    Blocks are opened at the smallest free vertex, so equal-size components
    are never placed twice; a block of size 2 is one edge and has one center.
    """

    def place(free: Tuple[int, ...], sizes: Counter) -> Iterator[List[Edge]]:
        if not free:
            yield []
            return
        first, rest = free[0], free[1:]
        for size in sorted(sizes):
            remaining = sizes.copy()
            remaining[size] -= 1
            if not remaining[size]:
                del remaining[size]
            for others in combinations(rest, size - 1):
                block = (first,) + others
                left = tuple(v for v in rest if v not in others)
                for center in block[:1] if size == 2 else block:
                    star = [(min(center, v), max(center, v)) for v in block if v != center]
                    for tail in place(left, remaining):
                        yield star + tail

    yield from place(tuple(range(m)), Counter(parts))


def _family_images(graph: Graph) -> Optional[Iterator[List[Edge]]]:
    if graph.family is None:
        return None
    kind, params = parse_graph_spec(graph.family)
    if kind == "K":
        return iter([list(combinations(range(graph.m), 2))])
    if kind == "S" and params[0] >= 2:
        return _star_forest_images(graph.m, params)
    if kind == "M":
        return _star_forest_images(graph.m, (2,) * params[0])
    if kind == "stars":
        return _star_forest_images(graph.m, params)
    return None


def _permutation_images(graph: Graph) -> Iterator[List[Edge]]:
    _check_brute_force_limit(graph, "embedding enumeration")
    for perm in permutations(range(graph.m)):
        yield [(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in graph.edges]


@lru_cache(maxsize=64)
def embedding_patterns(graph: Graph) -> np.ndarray:
    """Distinct edge images of the pattern under S_m.

    Returns an int64 array of shape (m!/|Aut|, e, 2); row p lists the
    position pairs (i, j), i < j, that a copy placed on a sorted m-subset
    occupies. Complete graphs, stars, matchings and disjoint stars are
    generated directly; other patterns go through all m! permutations.
    """
    expected = math.factorial(graph.m) // automorphism_count(graph)
    limit = get_settings().max_brute_force_order
    if expected > math.factorial(limit):
        raise LimitError(
            f"{graph.label()} has {expected} embedding patterns; limit is {limit}! = {math.factorial(limit)}"
        )
    images = _family_images(graph)
    if images is None:
        images = _permutation_images(graph)
    seen = {}
    for edges in images:
        image = tuple(sorted(edges))
        if image not in seen:
            seen[image] = len(seen)
    patterns = np.array(list(seen), dtype=np.int64).reshape(len(seen), graph.e, 2)
    patterns.setflags(write=False)
    logger.debug("Embedding patterns for %s: %s", graph.label(), len(seen))
    return patterns


def copies_in_complete(graph: Graph, n: int) -> int:
    """Number of copies of the pattern in K_n: binom(n, m) * m! / |Aut|."""
    if n < graph.m:
        raise DomainError(f"K_{n} is too small for a pattern on {graph.m} vertices")
    labeled = math.comb(n, graph.m) * math.factorial(graph.m)
    aut = automorphism_count(graph)
    if labeled % aut:
        raise ArithmeticError(f"|Aut|={aut} does not divide the labeled count {labeled}")
    return labeled // aut
