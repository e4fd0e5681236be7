from .baseline import monotonicity_check, random_baseline, recoloring_lower_bound
from .criteria import CompleteCriterion, DenseCriterion, complete_graph_criterion, dense1_criterion, dense2_criterion
from .exact import as_exact, to_decimal, to_pq
from .maclaurin import elementary_symmetric, maclaurin_upper, star_upper_bound
from .recurrence import BlowupRecurrence, blowup_coefficient, blowup_density, solve_blowup_recurrence
from .stars import StarPartition, disjoint_stars_target, star_partitions

__all__ = [
    "BlowupRecurrence",
    "CompleteCriterion",
    "DenseCriterion",
    "StarPartition",
    "as_exact",
    "blowup_coefficient",
    "blowup_density",
    "complete_graph_criterion",
    "dense1_criterion",
    "dense2_criterion",
    "disjoint_stars_target",
    "elementary_symmetric",
    "maclaurin_upper",
    "monotonicity_check",
    "random_baseline",
    "recoloring_lower_bound",
    "solve_blowup_recurrence",
    "star_partitions",
    "star_upper_bound",
    "to_decimal",
    "to_pq",
]
