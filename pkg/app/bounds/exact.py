"""Text forms of exact rationals.

All certificates are ``fractions.Fraction`` values: reduced, with a positive
denominator. Decimal renderings are for display only; the "p/q" string is
authoritative.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

RationalLike = Union[int, str, Fraction]


def as_exact(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, a Fraction or a 'p/q' string")
    return Fraction(value)


def to_pq(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def to_decimal(value: Fraction, digits: int = 10) -> str:
    """Decimal rendering to ``digits`` significant digits, never in exponent form."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return format(quotient, "f")
