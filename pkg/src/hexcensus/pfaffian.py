"""Exact Pfaffians and determinants of skew-symmetric rational matrices.

The production evaluator is a Parlett-Reid style skew elimination with
first-nonzero pivoting; an independent reference sums over perfect
matchings for matrices up to size 10.  The Mehta-Wang family and its
perturbed variant have closed forms that the elimination path is checked
against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import BudgetError
from .exact import Rational, binomial, factorial, pochhammer

__all__ = [
    "SkewMatrix",
    "pf",
    "pf_reference",
    "det",
    "mehta_wang_matrix",
    "mehta_wang_pf",
    "lambda_coeffs",
    "perturbed_mw_pf",
    "perturbed_mw_matrix",
]

_REFERENCE_SIZE_CAP = 10


class SkewMatrix:
    """Immutable square matrix with entries[j][i] == -entries[i][j]."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Rational]]):
        grid = tuple(tuple(Fraction(v) for v in row) for row in rows)
        n = len(grid)
        if any(len(row) != n for row in grid):
            raise ValueError("skew matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if grid[i][j] != -grid[j][i]:
                    raise ValueError(f"antisymmetry violated at entry ({i},{j})")
        self._rows = grid

    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def rows(self) -> list[list[Fraction]]:
        """Mutable copy of the entry grid."""
        return [list(row) for row in self._rows]

    def swapped(self, i: int, j: int) -> "SkewMatrix":
        """Copy with rows i,j and columns i,j swapped simultaneously."""
        grid = self.rows()
        grid[i], grid[j] = grid[j], grid[i]
        for row in grid:
            row[i], row[j] = row[j], row[i]
        return SkewMatrix(grid)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SkewMatrix(size={self.size})"


def pf(matrix: SkewMatrix) -> Fraction:
    """Pfaffian by exact skew-symmetric elimination.

    Pivot is the first nonzero entry right of the diagonal in the working
    row; simultaneous row/column swaps flip the sign.  A fully zero working
    row means the matrix is singular and the Pfaffian is 0.
    """
    n = matrix.size
    if n % 2:
        raise ValueError(f"Pfaffian is undefined for odd size {n}")
    a = matrix.rows()
    sign = 1
    result = Fraction(1)
    for k in range(0, n, 2):
        p = k + 1
        while p < n and a[k][p] == 0:
            p += 1
        if p == n:
            return Fraction(0)
        if p != k + 1:
            a[k + 1], a[p] = a[p], a[k + 1]
            for row in a:
                row[k + 1], row[p] = row[p], row[k + 1]
            sign = -sign
        pivot = a[k][k + 1]
        result *= pivot
        for j in range(k + 2, n):
            if a[k][j]:
                factor = a[k][j] / pivot
                pivot_row = a[k + 1]
                target = a[j]
                for idx in range(n):
                    target[idx] -= factor * pivot_row[idx]
                for row in a:
                    row[j] -= factor * row[k + 1]
    return result if sign == 1 else -result


def det(matrix: SkewMatrix) -> Fraction:
    """Exact determinant by rational Gaussian elimination."""
    n = matrix.size
    a = matrix.rows()
    sign = 1
    result = Fraction(1)
    for k in range(n):
        p = k
        while p < n and a[p][k] == 0:
            p += 1
        if p == n:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot = a[k][k]
        result *= pivot
        for i in range(k + 1, n):
            if a[i][k]:
                factor = a[i][k] / pivot
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return result if sign == 1 else -result


def pf_reference(matrix: SkewMatrix) -> Fraction:
    """Pfaffian by direct expansion over perfect matchings.

    Deliberately naive so it shares nothing with the elimination path;
    capped at size 10 (945 matchings).
    """
    n = matrix.size
    if n % 2:
        raise ValueError(f"Pfaffian is undefined for odd size {n}")
    if n > _REFERENCE_SIZE_CAP:
        raise BudgetError(f"pf_reference is capped at size {_REFERENCE_SIZE_CAP}, got {n}")

    def expand(indices: tuple[int, ...]) -> Fraction:
        if not indices:
            return Fraction(1)
        first = indices[0]
        total = Fraction(0)
        for pos in range(1, len(indices)):
            entry = matrix[first, indices[pos]]
            if entry:
                rest = indices[1:pos] + indices[pos + 1 :]
                term = entry * expand(rest)
                total += -term if pos % 2 == 0 else term
        return total

    return expand(tuple(range(n)))


def mehta_wang_matrix(k: int, b: int) -> SkewMatrix:
    """Skew matrix with entries (j - i)/(b + i + j)! for 0 <= i, j <= 2k-1."""
    if k < 1:
        raise ValueError("mehta_wang_matrix requires k >= 1")
    if b < 0:
        raise ValueError("mehta_wang_matrix requires b >= 0")
    size = 2 * k
    return SkewMatrix(
        [[Fraction(j - i, factorial(b + i + j)) for j in range(size)] for i in range(size)]
    )


def mehta_wang_pf(k: int, b: int) -> Fraction:
    """Closed form prod_{i=0}^{k-1} (2i+1)!/(b+2k+2i-1)! of the Mehta-Wang Pfaffian."""
    if k < 1:
        raise ValueError("mehta_wang_pf requires k >= 1")
    if b < 0:
        raise ValueError("mehta_wang_pf requires b >= 0")
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(factorial(2 * i + 1), factorial(b + 2 * k + 2 * i - 1))
    return value


def lambda_coeffs(s: int, r: int) -> list[Fraction]:
    """Coefficients lambda_1 .. lambda_{2s-1} of the perturbed Mehta-Wang evaluation."""
    if s < 1 or r < 1:
        raise ValueError("lambda_coeffs requires s >= 1 and r >= 1")
    coeffs = []
    for j in range(1, 2 * s):
        total = Fraction(0)
        for k in range(s):
            m = j + k - s
            weight = binomial(2 * k, m)
            if weight:
                total += weight * pochhammer(r + 2 * s, m) / (2**k * factorial(k))
        coeffs.append(total if j % 2 else -total)
    return coeffs


def perturbed_mw_pf(s: int, r: int, last_row: Sequence[Rational]) -> Fraction:
    """Pfaffian of a 2s x 2s Mehta-Wang matrix whose last row was replaced.

    ``last_row`` holds the entries a_{2s,1} .. a_{2s,2s-1}; every other entry
    above the last row keeps the Mehta-Wang form (j - i)/(r + i + j)!.
    """
    if s < 1 or r < 1:
        raise ValueError("perturbed_mw_pf requires s >= 1 and r >= 1")
    if len(last_row) != 2 * s - 1:
        raise ValueError(f"last_row must have length {2 * s - 1}, got {len(last_row)}")
    lam = lambda_coeffs(s, r)
    dot = sum((Fraction(v) * c for v, c in zip(last_row, lam)), Fraction(0))
    tail = Fraction(1)
    for i in range(s - 1):
        tail *= Fraction(factorial(2 * i + 1), factorial(r + 2 * s + 1 + 2 * i))
    return -(2 ** (s - 1)) * factorial(s - 1) * dot * tail


def perturbed_mw_matrix(s: int, r: int, last_row: Sequence[Rational]) -> SkewMatrix:
    """The assembled matrix that perturbed_mw_pf evaluates in closed form."""
    if len(last_row) != 2 * s - 1:
        raise ValueError(f"last_row must have length {2 * s - 1}, got {len(last_row)}")
    size = 2 * s
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(1, size):
        for j in range(1, size):
            rows[i - 1][j - 1] = Fraction(j - i, factorial(r + i + j))
    for j in range(1, size):
        value = Fraction(last_row[j - 1])
        rows[size - 1][j - 1] = value
        rows[j - 1][size - 1] = -value
    return SkewMatrix(rows)
