"""Skew matrices whose Pfaffians count centered vertically symmetric tilings.

``build_M(n, x)`` covers the (2n+1, 2x, 2n+1) hexagon family and
``build_N(n, x)`` the (2n, 2x+1, 2n) family; the two differ only in row and
column 2n+1.  Public indices i, j are 1-based to match the defining
equations.  The evaluation point x may be any exact rational: the entry
kernel ``r_entry_poly`` is a polynomial in x, which is what makes the
half-integer root and interpolation checks possible.  ``r_entry_sum`` is the
same kernel as a signed sum over an integer range and exists purely as an
independent cross-check at integer x.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Rational, binomial
from .pfaffian import SkewMatrix

__all__ = ["t_entry", "r_entry_poly", "r_entry_sum", "build_M", "build_N"]


def t_entry(i: int, j: int, n: int, x: Rational) -> Fraction:
    """Boundary kernel binom(2x+2n+1, i) * (binom(x+n, j) + binom(x+n+1, j))."""
    if i < 1 or j < 1:
        raise ValueError("t_entry indices are 1-based")
    x = Fraction(x)
    return binomial(2 * x + 2 * n + 1, i) * (
        binomial(x + n, j) + binomial(x + n + 1, j)
    )


def r_entry_poly(i: int, j: int, n: int, x: Rational) -> Fraction:
    """Interior kernel as a polynomial in x, defined for every rational x."""
    if i < 1 or j < 1:
        raise ValueError("r_entry_poly indices are 1-based")
    if i == j:
        return Fraction(0)
    x = Fraction(x)
    total = Fraction(0)
    for ell in range(i):
        total += (
            binomial(j - 1, i - 1 - ell)
            * binomial(ell + j, ell)
            * binomial(2 * x + 2 * n + 2, ell + j + 1)
        )
    return Fraction(j - i, i) * total


def r_entry_sum(i: int, j: int, n: int, x: int) -> Fraction:
    """Interior kernel as the signed sum over t = 1 .. 2x+2n+1 (integer x only).

    An upper bound below 1 follows the reversed-range convention: the sum is
    empty at bound 0 and negated-and-reversed for negative bounds.  Each term
    is the two-binomial difference form of (j-i)/t binom(t,i) binom(t,j),
    which removes the spurious singularity of the product form at t = 0.
    """
    if i < 1 or j < 1:
        raise ValueError("r_entry_sum indices are 1-based")
    if not isinstance(x, int) or isinstance(x, bool):
        raise ValueError(f"r_entry_sum needs an integer x, got {x!r}")
    upper = 2 * x + 2 * n + 1
    if upper == 0:
        return Fraction(0)
    if upper >= 1:
        span, sign = range(1, upper + 1), 1
    else:
        span, sign = range(upper + 1, 1), -1
    total = Fraction(0)
    for t in span:
        total += binomial(t, i) * binomial(t - 1, j - 1) - binomial(t - 1, i - 1) * binomial(t, j)
    return total if sign == 1 else -total


def build_M(n: int, x: Rational) -> SkewMatrix:
    """Counting matrix of size 2n+2 for the (2n+1, 2x, 2n+1) hexagon family.

    Entries M[i][j] = R_ij + T_ij - T_ji for 1 <= i, j <= 2n+1, last column
    M[i][2n+2] = binom(x+n, i-1), completed antisymmetrically.
    """
    if n < 0:
        raise ValueError("build_M requires n >= 0")
    x = Fraction(x)
    size = 2 * n + 2
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(1, 2 * n + 2):
        for j in range(i + 1, 2 * n + 2):
            value = t_entry(i, j, n, x) - t_entry(j, i, n, x) + r_entry_poly(i, j, n, x)
            rows[i - 1][j - 1] = value
            rows[j - 1][i - 1] = -value
        tail = binomial(x + n, i - 1)
        rows[i - 1][size - 1] = tail
        rows[size - 1][i - 1] = -tail
    return SkewMatrix(rows)


def build_N(n: int, x: Rational) -> SkewMatrix:
    """Counting matrix for the (2n, 2x+1, 2n) family.

    Same as build_M except row/column 2n+1: there the entry against row
    i <= 2n is binom(2n+2x+1, i) - binom(n+x, i) - binom(n+x+1, i), and the
    corner against column 2n+2 is zero.
    """
    if n < 1:
        raise ValueError("build_N requires n >= 1")
    x = Fraction(x)
    grid = build_M(n, x).rows()
    col = 2 * n  # 0-based position of row/column 2n+1
    for i in range(1, 2 * n + 1):
        value = (
            binomial(2 * n + 2 * x + 1, i)
            - binomial(n + x, i)
            - binomial(n + x + 1, i)
        )
        grid[i - 1][col] = value
        grid[col][i - 1] = -value
    grid[col][2 * n + 1] = Fraction(0)
    grid[2 * n + 1][col] = Fraction(0)
    return SkewMatrix(grid)
