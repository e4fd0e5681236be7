from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from errors import DomainError

from .exact import RationalLike, as_exact


def elementary_symmetric(xs: Sequence[RationalLike], d: int) -> Fraction:
    """Sum over all d-subsets of the product of their entries, exactly."""
    if d < 0:
        raise DomainError(f"degree must be non-negative, got {d}")
    sums = [Fraction(1)] + [Fraction(0)] * d
    for x in xs:
        value = as_exact(x)
        for j in range(d, 0, -1):
            sums[j] += sums[j - 1] * value
    return sums[d]


def maclaurin_upper(xs: Sequence[RationalLike], d: int) -> Fraction:
    """binom(n, d)·mean(xs)^d, an upper bound on the degree-d elementary symmetric sum."""
    values = [as_exact(x) for x in xs]
    if not 1 <= d <= len(values):
        raise DomainError(f"degree {d} is outside 1..{len(values)}")
    if any(x <= 0 for x in values):
        raise DomainError("Maclaurin's inequality needs positive entries")
    mean = sum(values, Fraction(0)) / len(values)
    return math.comb(len(values), d) * mean**d


def star_upper_bound(n: int, m: int, r: int) -> Fraction:
    """n·((n-1)/r)^(m-1)·binom(r, m-1): at most this many rainbow K_{1,m-1} in any r-coloring of K_n."""
    if not (n >= m >= 2) or r < 1:
        raise DomainError(f"star bound needs n >= m >= 2 and r >= 1, got n={n} m={m} r={r}")
    return n * Fraction(n - 1, r) ** (m - 1) * math.comb(r, m - 1)
