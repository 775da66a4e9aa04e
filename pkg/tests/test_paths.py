"""Unit tests for nonintersecting-path counting."""

import random
from fractions import Fraction

import pytest

from hexcensus import hexmatrices, paths, pfaffian
from hexcensus.errors import BudgetError
from hexcensus.paths import (
    PathConfig,
    h_count,
    h_weighted,
    m_path_config,
    n_path_config,
    signed_enumeration,
    stembridge_pf,
    sym_path_census,
)


def test_h_count_values():
    assert h_count((2, 2), (2, 2)) == 1
    assert h_count((-3, 3), (-1, 4)) == 3
    assert h_count((0, 0), (-1, 0)) == 0
    assert h_count((0, 0), (0, -2)) == 0


def test_h_weighted_defaults_to_h_count():
    rng = random.Random(3)
    for _ in range(20):
        a = (rng.randint(-3, 0), rng.randint(-3, 0))
        b = (a[0] + rng.randint(0, 3), a[1] + rng.randint(0, 3))
        assert h_weighted(a, b) == h_count(a, b)
        assert h_weighted(a, b, {}) == h_count(a, b)


def test_h_weighted_single_negative_edge():
    weights = {((0, 0), (0, 1)): Fraction(-1)}
    # every path through the marked edge flips sign; paths to (1,1) split 1/-1
    assert h_weighted((0, 0), (0, 1), weights) == -1
    assert h_weighted((0, 0), (1, 1), weights) == 0


def test_stembridge_trivial_configuration():
    config = PathConfig(((0, 0),), ((2, 3),), (), None)
    expected = h_count((0, 0), (2, 3))
    assert stembridge_pf(config) == expected
    assert signed_enumeration(config) == expected


def test_parity_required():
    config = PathConfig(((0, 0),), (), ((1, 1),), None)
    with pytest.raises(ValueError):
        stembridge_pf(config)
    with pytest.raises(ValueError):
        signed_enumeration(config)


def random_config(rng):
    p = rng.randint(1, 3)
    q = rng.randint(0, p)
    if (p + q) % 2:
        q = q + 1 if q < p else q - 1
    starts = tuple(rng.sample([(x, y) for x in range(3) for y in range(3)], p))
    ends = rng.sample(
        [pt for pt in ((x, y) for x in range(4) for y in range(4)) if pt not in starts],
        q + rng.randint(1, 3),
    )
    forced = tuple(ends[:q])
    free = tuple(ends[q:])
    weights = {}
    for x in range(4):
        for y in range(4):
            if rng.random() < 0.2:
                weights[((x, y), (x + 1, y))] = Fraction(-1)
            if rng.random() < 0.2:
                weights[((x, y), (x, y + 1))] = Fraction(-1)
    return PathConfig(starts, forced, free, weights)


def test_stembridge_matches_enumeration_randomized():
    rng = random.Random(99)
    for _ in range(12):
        config = random_config(rng)
        assert stembridge_pf(config) == signed_enumeration(config), config


def test_path_configs_reproduce_matrices():
    for n in (0, 1):
        for x in (1, 2):
            config = m_path_config(n, x)
            expected = pfaffian.pf(hexmatrices.build_M(n, x))
            assert stembridge_pf(config) == expected
            if n == 0 or x == 1:
                assert signed_enumeration(config) == expected
    for x in (0, 1):
        config = n_path_config(1, x)
        expected = pfaffian.pf(hexmatrices.build_N(1, x))
        assert stembridge_pf(config) == expected
        assert signed_enumeration(config) == expected


def test_m_path_config_assembles_the_counting_matrix():
    n, x = 1, 1
    config = m_path_config(n, x)
    matrix = hexmatrices.build_M(n, x)
    reach = [[h_weighted(a, e, config.weights) for e in config.free] for a in config.starts]
    p = len(config.starts)
    for i in range(p):
        for j in range(i + 1, p):
            q_entry = sum(
                reach[i][s] * reach[j][t] - reach[j][s] * reach[i][t]
                for s in range(len(config.free))
                for t in range(s + 1, len(config.free))
            )
            assert q_entry == matrix[i, j]
        assert h_weighted(config.starts[i], config.forced[0], config.weights) == matrix[i, p]


def test_sym_path_census_values():
    assert sym_path_census(0, 1, "odd") == 1
    assert sym_path_census(1, 1, "odd") == 17
    assert sym_path_census(1, 0, "even") == 2
    assert sym_path_census(1, 2, "odd") == 98


def test_sym_path_census_validation():
    with pytest.raises(ValueError):
        sym_path_census(1, 1, "diagonal")
    with pytest.raises(ValueError):
        sym_path_census(0, 0, "even")
    with pytest.raises(BudgetError):
        sym_path_census(9, 30, "odd")
