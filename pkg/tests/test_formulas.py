"""Unit tests for the closed-form counting formulas."""

import itertools
from fractions import Fraction

import pytest

from hexcensus import formulas


def test_count_t_values():
    assert formulas.count_T(1, 1, 1) == 2
    assert formulas.count_T(0, 3, 4) == 1
    assert formulas.count_T(3, 2, 3) == 175
    assert formulas.count_T(2, 1, 2) == 6


def test_count_t_symmetric():
    for a, b, c in itertools.product(range(4), repeat=3):
        reference = formulas.count_T(a, b, c)
        for perm in itertools.permutations((a, b, c)):
            assert formulas.count_T(*perm) == reference


def test_count_st_values():
    assert formulas.count_ST(3, 0) == 1
    assert formulas.count_ST(2, 1) == 4
    assert formulas.count_ST(3, 2) == 35


def test_q_factor_closed_form_at_n1():
    for x in range(6):
        assert formulas.q_factor(1, x) == Fraction(1, 2 * x + 1)
    assert formulas.q_factor(1, 1) == Fraction(1, 3)
    assert formulas.q_factor(2, 1) == Fraction(17, 35)


def test_q_factor_rejects_n0():
    with pytest.raises(ValueError):
        formulas.q_factor(0, 3)


def test_u_poly_values():
    assert formulas.u_poly(1, 0) == Fraction(3, 2)
    with pytest.raises(ValueError):
        formulas.u_poly(0, 1)


def test_r_factor_values():
    assert formulas.r_factor(1, 0) == Fraction(1, 2)
    value = formulas.r_factor(1, 1) * formulas.count_ST(2, 3)
    assert value.denominator == 1


def test_centered_counts():
    assert formulas.centered_count(1, 2) == 1
    assert formulas.centered_count(3, 2) == 85
    assert formulas.centered_count(2, 3) == 10


def test_centered_sym_counts():
    assert formulas.centered_sym_count(1, 2) == 1
    assert formulas.centered_sym_count(3, 2) == 17
    assert formulas.centered_sym_count(2, 1) == 2


def test_centered_rejects_same_parity():
    with pytest.raises(ValueError):
        formulas.centered_count(3, 3)
    with pytest.raises(ValueError):
        formulas.centered_sym_count(2, 2)


def test_centered_rejects_degenerate_domains():
    with pytest.raises(ValueError):
        formulas.centered_count(1, 0)
    with pytest.raises(ValueError):
        formulas.centered_sym_count(0, 1)


def test_probabilities():
    assert formulas.prob_centered(3, 2) == Fraction(17, 35)
    assert formulas.prob_centered_sym(3, 2) == Fraction(17, 35)
    assert formulas.prob_centered(1, 2) == Fraction(1, 3)
    assert formulas.prob_centered_sym(2, 1) == Fraction(1, 2)


def test_probability_equality_odd_even_b():
    for n in range(3):
        for x in range(1, 4):
            assert formulas.prob_centered(2 * n + 1, 2 * x) == formulas.prob_centered_sym(
                2 * n + 1, 2 * x
            )


def test_closed_forms_match_counts():
    for n in range(0, 3):
        for x in range(1, 4):
            assert formulas.centered_sym_value_odd(n, x) == formulas.centered_sym_count(
                2 * n + 1, 2 * x
            )
    for n in range(1, 3):
        for x in range(0, 4):
            assert formulas.centered_sym_value_even(n, x) == formulas.centered_sym_count(
                2 * n, 2 * x + 1
            )


def test_closed_forms_accept_rationals():
    value = formulas.centered_sym_value_odd(1, Fraction(1, 2))
    assert isinstance(value, Fraction)
    assert formulas.centered_sym_value_even(2, Fraction(-1)) == 0
