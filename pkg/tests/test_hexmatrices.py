"""Unit tests for the counting-matrix builders."""

from fractions import Fraction

import pytest

from hexcensus import hexmatrices, pfaffian
from hexcensus.hexmatrices import build_M, build_N, r_entry_poly, r_entry_sum, t_entry


def test_t_entry_direct():
    assert t_entry(1, 1, 0, 1) == 9
    # j above both upper arguments at integer x
    assert t_entry(1, 9, 1, 2) == 0


def test_t_entry_rational_point():
    value = t_entry(2, 1, 1, Fraction(-3, 2))
    from hexcensus.exact import binomial

    x = Fraction(-3, 2)
    assert value == binomial(2 * x + 3, 2) * (binomial(x + 1, 1) + binomial(x + 2, 1))


def test_r_entry_sum_direct():
    assert r_entry_sum(1, 2, 1, 0) == 4
    assert r_entry_sum(3, 3, 2, 1) == 0
    assert r_entry_sum(2, 5, 1, 1) == -r_entry_sum(5, 2, 1, 1)


def test_r_entry_sum_requires_integer_x():
    with pytest.raises(ValueError):
        r_entry_sum(1, 2, 1, Fraction(1, 2))


def test_r_entry_poly_matches_sum():
    for i in range(1, 6):
        for j in range(1, 6):
            for n in range(0, 4):
                for x in (-3, -2, -1, 0, 1, 2, 3, 4):
                    assert r_entry_poly(i, j, n, x) == r_entry_sum(i, j, n, x), (i, j, n, x)


def test_r_entry_sum_reversed_ranges():
    # the bound 2x+2n+1 goes negative for x < -n, reversing the range
    assert r_entry_sum(1, 2, 0, -1) == r_entry_poly(1, 2, 0, -1) == 0  # bound -1
    assert r_entry_sum(1, 2, 0, -2) == r_entry_poly(1, 2, 0, -2) != 0  # bound -3
    assert r_entry_sum(2, 4, 1, -3) == r_entry_poly(2, 4, 1, -3)  # bound -3


def test_build_m_base_case():
    for x in (0, 1, Fraction(5, 2), Fraction(-7, 3)):
        matrix = build_M(0, x)
        assert matrix.size == 2
        assert matrix[0, 1] == 1
        assert pfaffian.pf(matrix) == 1


def test_build_m_counts():
    assert pfaffian.pf(build_M(1, 1)) == 17
    assert pfaffian.pf(build_M(1, -1)) == 0


def test_build_n_counts():
    assert pfaffian.pf(build_N(1, 0)) == 2
    assert pfaffian.pf(build_N(1, -1)) == 0


def test_build_n_requires_positive_n():
    with pytest.raises(ValueError):
        build_N(0, 1)


def test_n_differs_from_m_only_in_one_line():
    for n in (1, 2):
        for x in (0, 2, Fraction(1, 2)):
            m_mat = build_M(n, x)
            n_mat = build_N(n, x)
            line = 2 * n  # 0-based row/column 2n+1
            for i in range(m_mat.size):
                for j in range(m_mat.size):
                    if i == line or j == line:
                        continue
                    assert m_mat[i, j] == n_mat[i, j]
            assert n_mat[line, 2 * n + 1] == 0


def test_functional_equations_at_half_integers():
    for n in (1, 2):
        sign_m = (-1) ** n
        sign_n = (-1) ** (n + 1)
        for x in (Fraction(1, 2), Fraction(-3, 2), 2):
            shift = -2 * n - 1 - x
            assert pfaffian.pf(build_M(n, x)) == sign_m * pfaffian.pf(build_M(n, shift))
            assert pfaffian.pf(build_N(n, x)) == sign_n * pfaffian.pf(build_N(n, shift))


def test_root_vanishing():
    for n in (1, 2, 3):
        for s in range(1, n + 1):
            assert pfaffian.pf(build_M(n, Fraction(-s))) == 0
            assert pfaffian.pf(build_M(n, -s - Fraction(1, 2))) == 0
            assert pfaffian.pf(build_N(n, Fraction(-s))) == 0
        for s in range(1, n):
            assert pfaffian.pf(build_N(n, -s - Fraction(3, 2))) == 0
