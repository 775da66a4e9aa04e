"""Floating-point checks of the limiting centered probability.

``r_float`` evaluates the exact ratio R(n,x) through its hypergeometric
rewriting (log-gamma prefactors, four terminating 4F3 sums of n terms
each) so the rewriting itself is testable against the exact rational
value; the arcsine law and the limiting 4F3 sum then get numeric checks at
large n where exact evaluation of the limit is impossible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "arcsin_prob",
    "r_float",
    "f_summand",
    "lemma_limit_lhs",
    "closed_rhs",
    "AsymptReport",
    "asympt_report",
]


def arcsin_prob(a: float) -> float:
    """Limiting centered probability (2/pi) arcsin(1/(a+1)) at aspect ratio a."""
    if a < 0:
        raise ValueError(f"aspect ratio must be nonnegative, got {a}")
    return (2.0 / math.pi) * math.asin(1.0 / (a + 1.0))


def _series_4f3(a2: float, a3: float, a4: float, b1: float, b2: float, b3: float,
                z: float, terms: int) -> float:
    # 4F3 with leading numerator parameter 1, so the k! cancels; the series
    # terminates after `terms` summands.
    total = 1.0
    term = 1.0
    for k in range(terms - 1):
        term *= (a2 + k) * (a3 + k) * (a4 + k) * z / ((b1 + k) * (b2 + k) * (b3 + k))
        total += term
    return total


def r_float(n: int, x: int) -> float:
    """Centered probability R(n,x) in double precision via hypergeometric form."""
    if n < 1:
        raise ValueError("r_float requires n >= 1")
    if x < 0:
        raise ValueError("r_float requires x >= 0")
    lg = math.lgamma
    ln2 = math.log(2.0)
    ln_pre = (
        (3 * n - 2) * ln2
        + lg(2 * x + 3)
        + lg(x + 2 * n + 1)
        - lg(n + 1)
        - lg(x + 2)
        - lg(2 * x + 4 * n + 1)
    )
    # (3/2 - n)_{2n-1} = (-1)^(n-1) (1/2)_{n-1} (1/2)_n, divided by (n-1)! n!
    ln_shared = (
        lg(n - 0.5) + lg(n + 0.5) - 2.0 * lg(0.5) - lg(n) - lg(n + 1)
    )
    sign_shared = -1.0 if (n - 1) % 2 else 1.0
    ln_df_odd = lg(2 * n + 1) - n * ln2 - lg(n + 1)  # (2n-1)!!
    ln_df_even = n * ln2 + lg(n + 1)  # (2n)!!
    sign_even = 1.0 if n % 2 else -1.0  # (-1)^(n+1)
    ln_p1 = lg(x + n) - lg(x + 1) + lg(x + 2 * n + 1) - lg(x + n + 1)
    ln_p2 = lg(x + n + 1) - lg(x + 1) + lg(x + 2 * n + 1) - lg(x + n + 2)

    fa_minus = _series_4f3(n + 0.5, 1.0 - n, -n - x, n + 1.0, 1.5 - n, 1.0 - n - x, -1.0, n)
    fa_plus = _series_4f3(n + 0.5, 1.0 - n, -n - x, n + 1.0, 1.5 - n, 1.0 - n - x, 1.0, n)
    fb_minus = _series_4f3(x + n + 1.0, n + 0.5, 1.0 - n, n + 1.0, 1.5 - n, x + n + 2.0, -1.0, n)
    fb_plus = _series_4f3(x + n + 1.0, n + 0.5, 1.0 - n, n + 1.0, 1.5 - n, x + n + 2.0, 1.0, n)

    base = ln_pre + ln_shared
    c_odd_1 = sign_shared * math.exp(base + ln_df_odd + ln_p1)
    c_odd_2 = sign_shared * math.exp(base + ln_df_odd + ln_p2)
    c_even_1 = sign_shared * sign_even * math.exp(base + ln_df_even + ln_p1)
    c_even_2 = sign_shared * sign_even * math.exp(base + ln_df_even + ln_p2)
    return c_odd_1 * fa_minus - c_odd_2 * fb_minus + c_even_1 * fa_plus - c_even_2 * fb_plus


def f_summand(n: int, k: int, b: float, r: int) -> float:
    """Summand F(n,k) of the limiting 4F3 sum; F(n,0) is exactly 1."""
    if abs(b) <= 1:
        raise ValueError(f"|b| must exceed 1, got {b}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in [0, n-1], got k={k}, n={n}")
    anchor = b * n + r
    value = anchor / (anchor + k)
    # Pochhammer-ratio form: every factorial cancels, so no overflow and no
    # log-gamma roundoff at k = 0.
    for m in range(k):
        value *= (n + 0.5 + m) * (n - k + m) / ((n + 1.0 + m) * (n - k - 0.5 + m))
    return value


def lemma_limit_lhs(n: int, b: float, r: int) -> float:
    """(1/n) * sum_{k=0}^{n-1} F(n,k), the quantity that tends to closed_rhs(b)."""
    if n < 1:
        raise ValueError("lemma_limit_lhs requires n >= 1")
    total = 0.0
    for k in range(n):
        total += f_summand(n, k, b, r)
    return total / n


def closed_rhs(b: float) -> float:
    """Limit value (2b/(b+1)) sqrt((b+1)/(b-1)) arctan(sqrt((b-1)/(b+1)))."""
    if abs(b) <= 1:
        raise ValueError(f"|b| must exceed 1, got {b}")
    ratio = (b - 1.0) / (b + 1.0)
    return (2.0 * b / (b + 1.0)) * math.sqrt(1.0 / ratio) * math.atan(math.sqrt(ratio))


@dataclass(frozen=True)
class AsymptReport:
    """Measured centered probabilities along x ~ ratio * n vs the arcsine limit."""

    ratio: float
    n_values: tuple[int, ...]
    measured: tuple[float, ...]
    target: float
    errors: tuple[float, ...]
    max_abs_error: float
    monotone_approach: bool

    def to_json(self) -> dict:
        return {
            "ratio": self.ratio,
            "n_values": list(self.n_values),
            "measured": list(self.measured),
            "target": self.target,
            "errors": list(self.errors),
            "max_abs_error": self.max_abs_error,
            "monotone_approach": self.monotone_approach,
        }


def asympt_report(ratio: float, n_values: Sequence[int]) -> AsymptReport:
    """Evaluate r_float(n, round(ratio * n)) across n against arcsin_prob(ratio)."""
    if not n_values:
        raise ValueError("need at least one n value")
    ns = tuple(int(n) for n in n_values)
    if any(n < 1 for n in ns):
        raise ValueError("all n values must be positive")
    target = arcsin_prob(ratio)
    measured = tuple(r_float(n, round(ratio * n)) for n in ns)
    errors = tuple(abs(m - target) for m in measured)
    monotone = all(errors[i + 1] < errors[i] for i in range(len(errors) - 1))
    return AsymptReport(
        ratio=float(ratio),
        n_values=ns,
        measured=measured,
        target=target,
        errors=errors,
        max_abs_error=max(errors),
        monotone_approach=monotone,
    )
