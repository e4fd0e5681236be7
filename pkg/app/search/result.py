from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from colorings import EdgeColoring, serialize_coloring


@dataclass(frozen=True)
class SearchResult:
    """Best rainbow count found for (H, n, r) together with its witness."""

    value: int
    exact: bool
    witness: EdgeColoring
    fraction: Fraction
    evaluations: int

    def sort_key(self) -> tuple:
        # Highest value first, then the lexicographically smallest witness file.
        return (-self.value, serialize_coloring(self.witness))


def best_of(results: Iterable[SearchResult]) -> SearchResult:
    ranked = sorted(results, key=SearchResult.sort_key)
    if not ranked:
        raise ValueError("no search results to merge")
    best = ranked[0]
    total = sum(result.evaluations for result in ranked)
    return SearchResult(
        value=best.value,
        exact=best.exact,
        witness=best.witness,
        fraction=best.fraction,
        evaluations=total,
    )
