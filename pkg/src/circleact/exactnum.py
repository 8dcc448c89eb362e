"""Exact integer and rational arithmetic.

Integers are plain Python ``int`` (already arbitrary precision).  Rationals
are ``fractions.Fraction``, which keeps the sign on the numerator and the
denominator strictly positive, so ``den`` of a reduced fraction is always
well defined and ``den(0) == 1``.  No floating point is used anywhere in
this package: every divisibility statement downstream is an integrality
statement and must be decided exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Rational",
    "reduce",
    "den",
    "factorial",
    "binomial",
    "parse_rational",
    "format_rational",
]

# All rational values in the package are Fractions: immutable, always in
# lowest terms, denominator >= 1.
Rational = Fraction


def reduce(num: int, denom: int) -> Fraction:
    """Lowest-terms fraction num/denom with positive denominator."""
    if denom == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, denom)


def den(r: Fraction | int) -> int:
    """Denominator of ``r`` expressed in lowest terms; ``den(0) == 1``."""
    return Fraction(r).denominator


def factorial(m: int) -> int:
    """m! for m >= 0."""
    return math.factorial(m)


def binomial(m: int, j: int) -> int:
    """m choose j.  Total for 0 <= j: returns 0 when j > m."""
    return math.comb(m, j)


def parse_rational(text: str) -> Fraction:
    """Parse a decimal integer or a ``p/q`` fraction string, reduced."""
    return Fraction(text.strip())


def format_rational(r: Fraction | int) -> str:
    """Render as ``p/q``, or just ``p`` when the denominator is 1."""
    return str(Fraction(r))
