from .exhaustive import exact_rb, growth_strings, leaf_estimate
from .local import IncrementalCounter, local_search
from .result import SearchResult, best_of
from .table import ConvergenceTable, convergence_table

__all__ = [
    "ConvergenceTable",
    "IncrementalCounter",
    "SearchResult",
    "best_of",
    "convergence_table",
    "exact_rb",
    "growth_strings",
    "leaf_estimate",
    "local_search",
]
