"""Bound and criterion evaluations packaged as CertificateResponse payloads.

The CLI prints ``summary`` in text mode and the whole payload with ``--json``;
the HTTP routes return the same payload.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence, Union

from bounds import (
    StarPartition,
    as_exact,
    blowup_coefficient,
    blowup_density,
    complete_graph_criterion,
    dense1_criterion,
    dense2_criterion,
    disjoint_stars_target,
    elementary_symmetric,
    maclaurin_upper,
    random_baseline,
    recoloring_lower_bound,
    solve_blowup_recurrence,
    star_upper_bound,
    to_decimal,
    to_pq,
)
from graphs import build_graph, copies_in_complete
from schemas import CertificateResponse

logger = logging.getLogger(__name__)


def _flag(value: bool) -> str:
    return "TRUE" if value else "FALSE"


def _approx(value) -> str:
    return f"{to_pq(value)} ≈ {to_decimal(value, 4)}"


def baseline_certificate(e: int, r: int) -> CertificateResponse:
    value = random_baseline(e, r)
    return CertificateResponse(
        criterion="baseline",
        summary=_approx(value),
        values={"e": str(e), "r": str(r), "baseline": to_pq(value), "decimal": to_decimal(value)},
    )


def complete_certificate(a: int, cap: Optional[int] = None) -> CertificateResponse:
    result = complete_graph_criterion(a, cap=cap)
    return CertificateResponse(
        criterion="complete",
        summary=f"not {math.comb(a, 2)}-anti-common: {_flag(result.holds)}",
        holds=result.holds,
        values={"a": str(a), "lhs": to_pq(result.lhs), "rhs": to_pq(result.rhs)},
    )


def dense1_certificate(m: int, e: int, c: Union[str, float, None] = None) -> CertificateResponse:
    result = dense1_criterion(m, e, c)
    verdict = _flag(result.holds) if result.applicable else "NOT APPLICABLE"
    values = {"m": str(m), "e": str(e), "c": result.c, "hypothesis_gap": result.hypothesis_gap}
    if result.log_gap is not None:
        values["log_gap"] = result.log_gap
    if result.edge_gap is not None:
        values["edge_gap"] = result.edge_gap
    return CertificateResponse(
        criterion="dense1",
        summary=f"not {math.comb(m, 2)}-anti-common: {verdict}",
        holds=result.holds,
        applicable=result.applicable,
        values=values,
    )


def dense2_certificate(m: int, e: int) -> CertificateResponse:
    holds = dense2_criterion(m, e)
    return CertificateResponse(
        criterion="dense2",
        summary=f"not {math.comb(m, 2)}-anti-common: {_flag(holds)}",
        holds=holds,
        values={"m": str(m), "e": str(e), "e_squared": str(e * e), "m_squared_m_minus_1": str(m * m * (m - 1))},
    )


def recolor_certificate(rb: int, r: int, e: int) -> CertificateResponse:
    bound = recoloring_lower_bound(rb, r, e)
    return CertificateResponse(
        criterion="recolor",
        summary=f"rb_{r} >= {_approx(bound)}",
        values={"rb_next": str(rb), "r": str(r), "e": str(e), "lower_bound": to_pq(bound)},
    )


def blowup_coef_certificate(a: int, t: int, m: int) -> CertificateResponse:
    rec = blowup_coefficient(a, t, m)
    return CertificateResponse(
        criterion="blowup-coef",
        summary=f"coefficient={_approx(rec.coefficient)}",
        values={"a": str(a), "t": str(t), "m": str(m), "coefficient": to_pq(rec.coefficient)},
    )


def recurrence_certificate(a: int, t: int, m: int, k: int, aut: Optional[int] = None) -> CertificateResponse:
    rec = blowup_coefficient(a, t, m)
    value = solve_blowup_recurrence(rec, k)
    values = {"n": str(a**k), "value": str(value), "coefficient": to_pq(rec.coefficient)}
    summary = f"F({a ** k})={value}"
    if aut is not None:
        density = blowup_density(rec, aut)
        values["density"] = to_pq(density)
        summary += f"  density={_approx(density)}"
    return CertificateResponse(criterion="recurrence", summary=summary, values=values)


def stars_certificate(parts: Sequence[int], r: int, n: int) -> CertificateResponse:
    partition = StarPartition.of(parts)
    target = disjoint_stars_target(partition, r, n)
    copies = copies_in_complete(build_graph(partition.spec()), n)
    normalized = target / copies
    baseline = random_baseline(partition.m - partition.k, r)
    logger.info("Star target: parts=%s r=%s n=%s normalized=%s", partition.parts, r, n, normalized)
    return CertificateResponse(
        criterion="stars",
        summary=f"{partition.spec()} target={_approx(target)}  normalized={to_pq(normalized)}",
        holds=normalized == baseline,
        values={
            "target": to_pq(target),
            "copies": str(copies),
            "normalized": to_pq(normalized),
            "baseline": to_pq(baseline),
            "automorphisms": str(partition.automorphisms),
        },
    )


def star_upper_certificate(n: int, m: int, r: int) -> CertificateResponse:
    bound = star_upper_bound(n, m, r)
    return CertificateResponse(
        criterion="star-upper",
        summary=f"rb_{r}(S{m};{n}) <= {_approx(bound)}",
        values={"n": str(n), "m": str(m), "r": str(r), "bound": to_pq(bound)},
    )


def maclaurin_certificate(xs: Sequence[str], d: int) -> CertificateResponse:
    exact = [as_exact(x) for x in xs]
    total = elementary_symmetric(exact, d)
    upper = maclaurin_upper(exact, d)
    return CertificateResponse(
        criterion="maclaurin",
        summary=f"e_{d}={to_pq(total)} <= {to_pq(upper)}: {_flag(total <= upper)}",
        holds=total <= upper,
        values={"sum": to_pq(total), "upper": to_pq(upper), "equal": str(total == upper).lower()},
    )
