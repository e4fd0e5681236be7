from .certificates import (
    baseline_certificate,
    blowup_coef_certificate,
    complete_certificate,
    dense1_certificate,
    dense2_certificate,
    maclaurin_certificate,
    recolor_certificate,
    recurrence_certificate,
    star_upper_certificate,
    stars_certificate,
)
from .rows import CSV_COLUMNS, monotone_verdict, report_row, render_text, rows_to_frame, table_rows, write_csv
from .statistics import MonteCarloEstimate, monte_carlo_fraction

__all__ = [
    "CSV_COLUMNS",
    "MonteCarloEstimate",
    "baseline_certificate",
    "blowup_coef_certificate",
    "complete_certificate",
    "dense1_certificate",
    "dense2_certificate",
    "maclaurin_certificate",
    "monotone_verdict",
    "monte_carlo_fraction",
    "recolor_certificate",
    "recurrence_certificate",
    "render_text",
    "report_row",
    "rows_to_frame",
    "star_upper_certificate",
    "stars_certificate",
    "table_rows",
    "write_csv",
]
