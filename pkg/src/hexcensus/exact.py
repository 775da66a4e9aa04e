"""Exact arbitrary-precision primitives shared by all counting code.

Integers are plain Python ints (unbounded, decimal round-trip for free);
rationals are ``fractions.Fraction``, which keeps every value in lowest
terms with a positive denominator after each operation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence, Union

ExactInt = int
ExactRational = Fraction
Rational = Union[int, Fraction]

__all__ = [
    "ExactInt",
    "ExactRational",
    "Rational",
    "factorial",
    "double_factorial",
    "pochhammer",
    "binomial",
    "poly_identity_check",
]


def factorial(k: int) -> int:
    """k! for nonnegative integer k."""
    if k < 0:
        raise ValueError(f"factorial is undefined for negative argument {k}")
    return math.factorial(k)


def double_factorial(k: int) -> int:
    """k!! with the conventions (-1)!! = 1 and 0!! = 1."""
    if k < -1:
        raise ValueError(f"double factorial is undefined below -1, got {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def pochhammer(a: Rational, k: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError(f"pochhammer is undefined for negative length {k}")
    base = Fraction(a)
    result = Fraction(1)
    for t in range(k):
        result *= base + t
    return result


def binomial(r: Rational, k: int) -> Fraction:
    """Generalized binomial r (r-1) ... (r-k+1) / k!; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    top = Fraction(r)
    result = Fraction(1)
    for t in range(k):
        result *= top - t
    return result / math.factorial(k)


def poly_identity_check(
    f: Callable[[Fraction], Rational],
    g: Callable[[Fraction], Rational],
    degree_bound: int,
    points: Sequence[Rational],
) -> bool:
    """Decide whether two polynomials of degree <= degree_bound are identical.

    Agreement at degree_bound + 1 distinct points certifies the identity, so
    the caller must supply at least that many pairwise distinct points.
    """
    pts = [Fraction(p) for p in points]
    if len(pts) < degree_bound + 1:
        raise ValueError(
            f"need at least {degree_bound + 1} points for degree bound "
            f"{degree_bound}, got {len(pts)}"
        )
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be pairwise distinct")
    return all(Fraction(f(p)) == Fraction(g(p)) for p in pts)
