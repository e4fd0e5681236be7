from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Literal, Optional, Tuple

from bounds import monotonicity_check
from errors import BudgetExceededError
from graphs import Graph
from schemas import SearchParams

from .exhaustive import exact_rb
from .local import local_search
from .result import SearchResult

logger = logging.getLogger(__name__)

TableMode = Literal["exact", "search", "auto"]


@dataclass(frozen=True)
class ConvergenceTable:
    graph: Graph
    r: int
    rows: List[Tuple[int, SearchResult]]
    # None when at least one row is only a lower bound
    monotone: Optional[bool]

    @property
    def all_exact(self) -> bool:
        return all(result.exact for _, result in self.rows)


def convergence_table(
    graph: Graph,
    r: int,
    n_range: Iterable[int],
    mode: TableMode = "exact",
    params: Optional[SearchParams] = None,
    budget: Optional[int] = None,
) -> ConvergenceTable:
    """rb rows in ascending n.

    ``exact`` propagates budget errors, ``search`` runs local search only and
    ``auto`` falls back to local search for rows over the exhaustive budget.
    """
    rows: List[Tuple[int, SearchResult]] = []
    for n in sorted(set(n_range)):
        if mode == "search":
            result = local_search(graph, n, r, params)
        else:
            try:
                result = exact_rb(graph, n, r, budget=budget)
            except BudgetExceededError:
                if mode == "exact":
                    raise
                logger.info("Row n=%s over budget; using local search", n)
                result = local_search(graph, n, r, params)
        rows.append((n, result))

    monotone: Optional[bool] = None
    if rows and all(result.exact for _, result in rows):
        fractions = [result.fraction for _, result in rows]
        non_increasing = all(a >= b for a, b in zip(fractions, fractions[1:]))
        consecutive = all(b[0] == a[0] + 1 for a, b in zip(rows, rows[1:]))
        inequality = monotonicity_check(graph, [(n, result.value) for n, result in rows]) if consecutive else True
        monotone = non_increasing and inequality
    else:
        logger.info("Monotonicity check skipped: table has heuristic rows")
    return ConvergenceTable(graph=graph, r=r, rows=rows, monotone=monotone)
