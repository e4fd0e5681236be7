"""Sufficient conditions for a pattern not to be r-anti-common.

complete_graph_criterion and dense2_criterion are decided in exact integer /
rational arithmetic. dense1_criterion mixes pi and a logarithm, so it is
evaluated with mpmath at a configured precision and every comparison that
lands within the configured margin of equality raises IndeterminateError.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import NamedTuple, Optional, Union

import mpmath as mp

from config import get_settings
from errors import DomainError, IndeterminateError, ResourceError

from .baseline import random_baseline
from .recurrence import blowup_coefficient, blowup_density

logger = logging.getLogger(__name__)


class CompleteCriterion(NamedTuple):
    holds: bool
    lhs: Fraction
    rhs: Fraction


class DenseCriterion(NamedTuple):
    applicable: bool
    holds: bool
    c: str
    hypothesis_gap: str
    log_gap: Optional[str] = None
    edge_gap: Optional[str] = None


def complete_graph_criterion(a: int, cap: Optional[int] = None) -> CompleteCriterion:
    """Decide a!/(a^a - a) > binom(a,2)! / binom(a,2)^binom(a,2) exactly.

    The left side is the limit rainbow fraction of the iterated blow-up of a
    rainbow K_a; the right side is the random-coloring value with binom(a,2)
    colors.
    """
    if a < 2:
        raise DomainError(f"complete graph criterion needs a >= 2, got {a}")
    cap = cap if cap is not None else get_settings().complete_cap
    if a > cap:
        raise ResourceError(f"a={a} exceeds the configured cap {cap}")
    edges = math.comb(a, 2)
    lhs = blowup_density(blowup_coefficient(a, 1, a), math.factorial(a))
    rhs = random_baseline(edges, edges)
    logger.info("Complete graph criterion: a=%s lhs=%s rhs=%s", a, lhs, rhs)
    return CompleteCriterion(holds=lhs > rhs, lhs=lhs, rhs=rhs)


def _guarded_sign(value: mp.mpf, margin: float, what: str) -> int:
    if abs(value) < margin:
        raise IndeterminateError(f"{what} is within {margin} of equality ({mp.nstr(value, 15)})")
    return 1 if value > 0 else -1


def dense1_criterion(m: int, e: int, c: Union[float, str, None] = None) -> DenseCriterion:
    """Density condition for H with m vertices and e edges not to be binom(m,2)-anti-common.

    ``c`` defaults to 2/sqrt(m-1), the choice made for the e > m·sqrt(m-1) corollary.
    """
    if m < 2 or e < 0:
        raise DomainError(f"dense criterion needs m >= 2 and e >= 0, got m={m} e={e}")
    settings = get_settings()
    margin = settings.dense_margin
    with mp.workdps(settings.dense_dps):
        cval = 2 / mp.sqrt(m - 1) if c is None else mp.mpf(c)
        if not 0 < cval < 1:
            raise DomainError(f"c must lie in (0, 1), got {mp.nstr(cval, 15)}")
        pairs = math.comb(m, 2)
        hypothesis = 2 * mp.pi * m * (1 - cval) - 1
        applicable = _guarded_sign(hypothesis, margin, "2·pi·m·(1-c) - 1") > 0
        result = DenseCriterion(applicable=applicable, holds=False, c=mp.nstr(cval, 20), hypothesis_gap=mp.nstr(hypothesis, 20))
        if not applicable:
            return result
        log_gap = cval + (1 - cval) * mp.log(1 - cval) - (mp.mpf(2) / (m - 1) + mp.mpf(1) / (12 * pairs**2))
        edge_gap = e - cval * pairs
        holds = (
            _guarded_sign(log_gap, margin, "log inequality") > 0
            and _guarded_sign(edge_gap, margin, "e - c·binom(m,2)") > 0
        )
        logger.info("Dense criterion: m=%s e=%s c=%s holds=%s", m, e, result.c, holds)
        return result._replace(holds=holds, log_gap=mp.nstr(log_gap, 20), edge_gap=mp.nstr(edge_gap, 20))


def dense2_criterion(m: int, e: int) -> bool:
    """m >= 6 and e > m·sqrt(m-1), compared as e^2 > m^2·(m-1)."""
    if m < 2 or e < 0:
        raise DomainError(f"dense criterion needs m >= 2 and e >= 0, got m={m} e={e}")
    return m >= 6 and e * e > m * m * (m - 1)
