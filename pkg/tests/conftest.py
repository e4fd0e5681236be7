from itertools import permutations

import numpy as np
import pytest

from colorings import EdgeColoring, builtin_base_coloring
from config import get_settings
from graphs import Graph, brute_force_automorphisms


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fig_k5() -> EdgeColoring:
    return builtin_base_coloring("fig-k5")


def constant_coloring(n: int, r: int, color: int = 0) -> EdgeColoring:
    return EdgeColoring(n=n, r=r, colors=np.full(n * (n - 1) // 2, color))


def naive_rainbow_count(graph: Graph, coloring: EdgeColoring) -> int:
    """Rainbow injective placements of the pattern divided by |Aut|."""
    matrix = coloring.matrix
    labeled = 0
    for image in permutations(range(coloring.n), graph.m):
        colors = [int(matrix[image[u], image[v]]) for u, v in graph.edges]
        if len(set(colors)) == len(colors):
            labeled += 1
    aut = brute_force_automorphisms(graph)
    assert labeled % aut == 0
    return labeled // aut
