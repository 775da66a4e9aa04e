"""Tests for the verification suites, including mutation sensitivity."""

from fractions import Fraction

import pytest

from hexcensus import formulas, verify


def test_all_suites_pass():
    outcomes = verify.run_suite("all", max_n=2, max_x=2)
    assert [o.suite for o in outcomes] == [
        "core", "pfaffian", "matrices", "theorems", "oracle", "asympt",
    ]
    for outcome in outcomes:
        assert outcome.ok, outcome.failures[:3]
        assert outcome.cases > 0


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.run_suite("everything")


def test_outcome_json_shape():
    outcome = verify.run_suite("core")[0]
    payload = outcome.to_json()
    assert payload["suite"] == "core"
    assert payload["failures"] == []
    assert isinstance(payload["cases"], int)


def test_oracle_suite_reports_one_third_family():
    outcome = verify.run_suite("oracle", max_n=1, max_x=1)[0]
    assert outcome.ok
    assert any("1/3" in note for note in outcome.notes)
    assert any("(2n+1,2n+2,2n+1)" in note for note in outcome.notes)


def test_broken_formula_is_detected(monkeypatch):
    """Perturbing one formula constant must fail the theorems suite."""
    true_q = formulas.q_factor

    def broken_q(n, x):
        return true_q(n, x) + Fraction(1, 1000)

    monkeypatch.setattr(formulas, "q_factor", broken_q)
    outcome = verify.run_suite("theorems", max_n=1, max_x=1)[0]
    assert not outcome.ok


def test_broken_pfaffian_entry_is_detected(monkeypatch):
    from hexcensus import hexmatrices

    true_entry = hexmatrices.t_entry

    def broken_entry(i, j, n, x):
        value = true_entry(i, j, n, x)
        return value + 1 if (i, j) == (1, 2) else value

    monkeypatch.setattr(hexmatrices, "t_entry", broken_entry)
    outcome = verify.run_suite("theorems", max_n=1, max_x=1)[0]
    assert not outcome.ok
