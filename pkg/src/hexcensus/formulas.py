"""Closed-form counts of rhombus tilings of an (a,b,c) hexagon.

Covers the total count (MacMahon's box product), the vertically symmetric
count (Andrews' product), and the centered / centered-symmetric counts
obtained by multiplying those by the exact rational ratios Q and R.  Every
count is an exact rational that must reduce to an integer; a non-integer
result raises instead of rounding, which is the library's primary defect
detector.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Rational, double_factorial, factorial, pochhammer

__all__ = [
    "count_T",
    "count_ST",
    "q_factor",
    "u_poly",
    "r_factor",
    "centered_count",
    "centered_sym_count",
    "prob_centered",
    "prob_centered_sym",
    "centered_sym_value_odd",
    "centered_sym_value_even",
    "factorization_check",
]


def _require_nonneg(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {value}")
    if value < 0:
        raise ArithmeticError(f"{what} evaluated to the negative value {value}")
    return value.numerator


def count_T(a: int, b: int, c: int) -> int:
    """Number of rhombus tilings of an (a,b,c) hexagon."""
    _require_nonneg(a=a, b=b, c=c)
    num = 1
    den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    return _as_count(Fraction(num, den), f"T({a},{b},{c})")


def count_ST(a: int, b: int) -> int:
    """Number of vertically symmetric rhombus tilings of an (a,b,a) hexagon."""
    _require_nonneg(a=a, b=b)
    value = Fraction(1)
    for i in range(1, a + 1):
        value *= Fraction(2 * i + b - 1, 2 * i - 1)
    for i in range(1, a + 1):
        for j in range(i + 1, a + 1):
            value *= Fraction(i + j + b - 1, i + j - 1)
    return _as_count(value, f"ST({a},{b},{a})")


def q_factor(n: int, x: int) -> Fraction:
    """Exact centered-tiling ratio Q(n,x) of the odd hexagon family."""
    _require_nonneg(n=n, x=x)
    if n < 1:
        raise ValueError("q_factor requires n >= 1")
    prefactor = Fraction(
        factorial(2 * n) ** 2 * factorial(2 * x) * factorial(x + 2 * n - 1),
        2 * factorial(n) ** 2 * factorial(x) * factorial(2 * x + 4 * n - 2),
    )
    total = Fraction(0)
    for i in range(n):
        sign = -1 if (n - i - 1) % 2 else 1
        total += (
            Fraction(sign, 2 * n - 2 * i - 1)
            * pochhammer(x + n - i, 2 * i)
            / factorial(i) ** 2
        )
    return prefactor * total


def u_poly(n: int, x: Rational) -> Fraction:
    """The polynomial U_n(x) entering r_factor; degree at most 2n-2 in x."""
    if n < 1:
        raise ValueError("u_poly requires n >= 1")
    x = Fraction(x)
    odd_df = double_factorial(2 * n - 1)
    even_df = double_factorial(2 * n)
    total = Fraction(0)
    for i in range(1, n + 1):
        coeff = odd_df + (even_df if i % 2 == 1 else -even_df)
        base = pochhammer(Fraction(3, 2) - i, 2 * n - 1) / (
            factorial(i - 1) * factorial(2 * n - i)
        )
        diff = pochhammer(x + 1, i - 1) * pochhammer(x + i + 1, 2 * n - i) - pochhammer(
            x + 1, 2 * n - i
        ) * pochhammer(x + 2 * n + 2 - i, i - 1)
        total += coeff * base * diff
    return total


def r_factor(n: int, x: int) -> Fraction:
    """Exact centered-tiling ratio R(n,x) of the even hexagon family."""
    _require_nonneg(x=x)
    if n < 1:
        raise ValueError("r_factor requires n >= 1")
    prefactor = Fraction(
        2 ** (3 * n - 2) * factorial(2 * x + 2) * factorial(x + 2 * n),
        factorial(n) * factorial(x + 1) * factorial(2 * x + 4 * n),
    )
    return prefactor * u_poly(n, x)


def _split_opposite_parity(a: int, b: int) -> tuple[int, int]:
    _require_nonneg(a=a, b=b)
    if a % 2 == b % 2:
        raise ValueError(
            f"an ({a},{b},{a}) hexagon has no central rhombus: "
            "a and b must have opposite parity"
        )
    if a % 2 == 1:
        n, x = (a - 1) // 2, b // 2
        if x < 1:
            raise ValueError(f"odd side a = {a} requires b >= 2, got {b}")
    else:
        n, x = a // 2, (b - 1) // 2
        if n < 1:
            raise ValueError(f"even side a must be >= 2, got {a}")
    return n, x


def centered_count(a: int, b: int) -> int:
    """Tilings of an (a,b,a) hexagon that contain the central rhombus."""
    n, x = _split_opposite_parity(a, b)
    if a % 2 == 1:
        value = q_factor(n + 1, x) * count_T(a, b, a)
    else:
        value = q_factor(n, x + 1) * count_T(a, b, a)
    return _as_count(value, f"centered count of ({a},{b},{a})")


def centered_sym_count(a: int, b: int) -> int:
    """Centered vertically symmetric tilings of an (a,b,a) hexagon."""
    n, x = _split_opposite_parity(a, b)
    if a % 2 == 1:
        value = q_factor(n + 1, x) * count_ST(a, b)
    else:
        value = r_factor(n, x) * count_ST(a, b)
    return _as_count(value, f"centered symmetric count of ({a},{b},{a})")


def prob_centered(a: int, b: int) -> Fraction:
    """Exact probability that a random tiling contains the central rhombus."""
    return Fraction(centered_count(a, b), count_T(a, b, a))


def prob_centered_sym(a: int, b: int) -> Fraction:
    """Exact probability that a random vertically symmetric tiling is centered."""
    return Fraction(centered_sym_count(a, b), count_ST(a, b))


def centered_sym_value_odd(n: int, x: Rational) -> Fraction:
    """Centered symmetric count of a (2n+1, 2x, 2n+1) hexagon as a polynomial in x.

    Agrees with ``q_factor(n+1, x) * count_ST(2n+1, 2x)`` at integer x >= 1 and
    extends it to arbitrary rational x (degree 2n^2 + 3n).
    """
    _require_nonneg(n=n)
    x = Fraction(x)
    prefactor = Fraction(
        factorial(2 * n + 2) ** 2 * factorial(2 * n),
        4 * factorial(n + 1) ** 2 * factorial(4 * n + 1),
    )
    value = prefactor
    for s in range(1, n + 1):
        value *= pochhammer(2 * x + 2 * s, 4 * n - 4 * s + 3) / pochhammer(
            2 * s, 4 * n - 4 * s + 3
        )
    total = Fraction(0)
    for i in range(n + 1):
        sign = -1 if (n - i) % 2 else 1
        total += (
            Fraction(sign, 2 * n + 1 - 2 * i)
            * pochhammer(x + n + 1 - i, 2 * i)
            / factorial(i) ** 2
        )
    return value * total


def centered_sym_value_even(n: int, x: Rational) -> Fraction:
    """Centered symmetric count of a (2n, 2x+1, 2n) hexagon as a polynomial in x.

    Agrees with ``r_factor(n, x) * count_ST(2n, 2x+1)`` at integer x >= 0 and
    extends it to arbitrary rational x (degree 2n^2 + n - 1).
    """
    if n < 1:
        raise ValueError("centered_sym_value_even requires n >= 1")
    x = Fraction(x)
    value = Fraction(2 ** (5 * n - 1), factorial(n) * factorial(4 * n))
    value *= pochhammer(x + 1, 2 * n)
    for s in range(2, n + 1):
        value *= pochhammer(2 * x + 2 * s, 4 * n - 4 * s + 3) / pochhammer(
            2 * s, 4 * n - 4 * s + 3
        )
    return value * u_poly(n, x)


def factorization_check(n: int, x: int, limit: int | None = None) -> bool:
    """Whether centered = centered-vsym * centered-hsym on a (2n+1,2x,2n+1) hexagon.

    Measured entirely on brute-force census counts, so it is independent of
    the product formulas above.
    """
    _require_nonneg(n=n, x=x)
    if x < 1:
        raise ValueError("factorization_check requires x >= 1")
    from . import oracle as census_mod  # deferred: the oracle imports this module

    kwargs = {} if limit is None else {"limit": limit}
    counts = census_mod.census(2 * n + 1, 2 * x, 2 * n + 1, **kwargs)
    if counts.centered_vsym is None or counts.centered_hsym is None:
        raise ArithmeticError(
            f"({2*n+1},{2*x},{2*n+1}) hexagon lacks a symmetry the factorization needs"
        )
    return counts.centered == counts.centered_vsym * counts.centered_hsym
