"""Disjoint unions of stars.

A star partition P = {m_1, ..., m_k} (each part >= 2) names the pattern S_P
whose components are K_{1, m_i - 1}. With M_s the multiplicity of the s-th
distinct part size:

    gamma(P)        = prod M_s!                 (swaps of equal components)
    multinomial(P)  = (m - k)! / prod (m_i - 1)!
    center_symmetry = 2^(number of parts equal to 2)
    |Aut(S_P)|      = gamma · center_symmetry · prod (m_i - 1)!

A K_{1,1} component has two possible centers, which is what center_symmetry
accounts for; the rainbow target divides by it as well so that the target
normalised by the copy count is exactly the random baseline.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Tuple

from errors import DomainError


@dataclass(frozen=True)
class StarPartition:
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise DomainError("a star partition needs at least one part")
        small = [part for part in self.parts if part < 2]
        if small:
            raise DomainError(f"every part must be at least 2, got {small[0]}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @classmethod
    def of(cls, parts: Sequence[int]) -> "StarPartition":
        return cls(tuple(int(part) for part in parts))

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def gamma(self) -> int:
        return math.prod(math.factorial(mult) for mult in Counter(self.parts).values())

    @property
    def multinomial(self) -> int:
        return math.factorial(self.m - self.k) // math.prod(math.factorial(part - 1) for part in self.parts)

    @property
    def center_symmetry(self) -> int:
        return 2 ** self.parts.count(2)

    @property
    def automorphisms(self) -> int:
        return self.gamma * self.center_symmetry * math.prod(math.factorial(part - 1) for part in self.parts)

    def spec(self) -> str:
        return "stars:" + ",".join(str(part) for part in self.parts)


def star_partitions(m: int, k: int) -> Iterator[StarPartition]:
    """Partitions of m into exactly k parts, each at least 2, parts non-increasing."""

    def extend(remaining: int, slots: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for part in range(min(cap, remaining - 2 * (slots - 1)), 1, -1):
            for tail in extend(remaining - part, slots - 1, part):
                yield (part,) + tail

    for parts in extend(m, k, m):
        yield StarPartition(parts)


def disjoint_stars_target(partition: StarPartition, r: int, n: int) -> Fraction:
    """Leading-order rb_r(S_P; n), i.e. the random-coloring expectation of rainbow copies."""
    m, k = partition.m, partition.k
    if r < m - k or n < m:
        raise DomainError(f"target needs r >= m - k and n >= m, got m={m} k={k} r={r} n={n}")
    numerator = partition.multinomial * math.comb(r, m - k) * math.comb(n, m) * math.factorial(m)
    denominator = partition.gamma * partition.center_symmetry * r ** (m - k)
    return Fraction(numerator, denominator)
