from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from errors import DomainError


@dataclass(frozen=True)
class BlowupRecurrence:
    """F(n) >= a·F(n/a) + t·(n/a)^m, whose solution grows like coefficient·n^m."""

    a: int
    t: int
    m: int
    coefficient: Fraction


def blowup_coefficient(a: int, t: int, m: int) -> BlowupRecurrence:
    if a < 2 or t < 0 or m < 2:
        raise DomainError(f"recurrence needs a >= 2, t >= 0, m >= 2; got a={a} t={t} m={m}")
    return BlowupRecurrence(a=a, t=t, m=m, coefficient=Fraction(t, a**m - a))


def solve_blowup_recurrence(rec: BlowupRecurrence, k: int) -> int:
    """Exact F(a^k) with F(1) = 0 and equality in every step."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    value = 0
    for level in range(1, k + 1):
        value = rec.a * value + rec.t * (rec.a ** (level - 1)) ** rec.m
    return value


def blowup_density(rec: BlowupRecurrence, aut: int) -> Fraction:
    """Limit rainbow fraction of the blow-up: coefficient·|Aut(H)|."""
    if aut < 1:
        raise DomainError(f"|Aut| must be positive, got {aut}")
    return rec.coefficient * aut
