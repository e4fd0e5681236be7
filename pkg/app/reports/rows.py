from __future__ import annotations

import logging
from typing import IO, List, Optional, Sequence, Union

import pandas as pd

from bounds import random_baseline, to_decimal, to_pq
from graphs import Graph
from schemas import ReportRow
from search import ConvergenceTable, SearchResult

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["n", "r", "graph", "rb", "exact", "fraction_decimal", "fraction_exact", "baseline_exact"]


def baseline_verdict(result: SearchResult, graph: Graph, r: int) -> str:
    baseline = random_baseline(graph.e, r)
    if result.fraction > baseline:
        return "above-baseline"
    if result.fraction == baseline:
        return "at-baseline"
    if result.exact:
        logger.error("Exact fraction %s is below the random baseline %s", result.fraction, baseline)
    return "below-baseline"


def report_row(spec: str, graph: Graph, n: int, r: int, result: SearchResult, extra: Sequence[str] = ()) -> ReportRow:
    return ReportRow(
        n=n,
        r=r,
        graph=spec,
        rb=result.value,
        exact=result.exact,
        fraction_decimal=to_decimal(result.fraction),
        fraction_exact=to_pq(result.fraction),
        baseline_exact=to_pq(random_baseline(graph.e, r)),
        verdicts=[baseline_verdict(result, graph, r), *extra],
    )


def monotone_verdict(table: ConvergenceTable) -> str:
    if table.monotone is None:
        return "monotone-skipped"
    return "monotone-ok" if table.monotone else "monotone-violation"


def table_rows(spec: str, table: ConvergenceTable) -> List[ReportRow]:
    verdict = monotone_verdict(table)
    return [report_row(spec, table.graph, n, table.r, result, extra=[verdict]) for n, result in table.rows]


def rows_to_frame(rows: Sequence[ReportRow]) -> pd.DataFrame:
    frame = pd.DataFrame([row.model_dump() for row in rows], columns=CSV_COLUMNS + ["verdicts"])
    frame["verdicts"] = frame["verdicts"].map(lambda items: ";".join(items) if isinstance(items, list) else "")
    return frame


def write_csv(rows: Sequence[ReportRow], target: Union[str, IO[str], None] = None) -> Optional[str]:
    """Write header + rows; returns the text when no target is given."""
    frame = rows_to_frame(rows)[CSV_COLUMNS]
    return frame.to_csv(target, index=False, lineterminator="\n")


def render_text(rows: Sequence[ReportRow]) -> str:
    return rows_to_frame(rows).to_string(index=False)
