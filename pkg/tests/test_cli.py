"""End-to-end tests of the command line interface."""

import json

import pytest

from hexcensus import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_all_formula(capsys):
    code, out, _ = run_cli(capsys, "count", "--a", "1", "--b", "1", "--c", "1", "--class", "all")
    assert code == 0
    record = json.loads(out)
    assert record == {"a": 1, "b": 1, "c": 1, "class": "all", "method": "formula", "count": "2"}
    assert list(record) == ["a", "b", "c", "class", "method", "count"]


def test_count_pfaffian_method(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--a", "3", "--b", "2", "--c", "3",
        "--class", "centered-vsym", "--method", "pfaffian",
    )
    assert code == 0
    assert json.loads(out)["count"] == "17"


def test_count_enumerate_method(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--a", "3", "--b", "2", "--c", "3",
        "--class", "centered", "--method", "enumerate",
    )
    assert code == 0
    assert json.loads(out)["count"] == "85"


def test_count_methods_agree(capsys):
    values = {}
    for method in ("formula", "pfaffian", "enumerate"):
        code, out, _ = run_cli(
            capsys, "count", "--a", "3", "--b", "4", "--c", "3",
            "--class", "centered-vsym", "--method", method,
        )
        assert code == 0
        values[method] = json.loads(out)["count"]
    assert len(set(values.values())) == 1


def test_count_counts_are_strings(capsys):
    code, out, _ = run_cli(capsys, "count", "--a", "4", "--b", "4", "--c", "4")
    assert code == 0
    assert isinstance(json.loads(out)["count"], str)


def test_count_shape_mismatch_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "count", "--a", "3", "--b", "2", "--c", "2", "--class", "vsym")
    assert code == 2
    assert "symmetric" in err


def test_count_same_parity_centered_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "count", "--a", "3", "--b", "3", "--c", "3", "--class", "centered")
    assert code == 2


def test_count_budget_is_resource_error(capsys):
    code, _, err = run_cli(
        capsys, "count", "--a", "5", "--b", "4", "--c", "5", "--method", "enumerate",
    )
    assert code == 3
    assert "budget" in err


def test_count_auto_falls_back_to_enumerate(capsys):
    # (1,0,1) has a central rhombus but sits outside the formula domain
    code, out, _ = run_cli(capsys, "count", "--a", "1", "--b", "0", "--c", "1",
                           "--class", "centered")
    assert code == 0
    record = json.loads(out)
    assert record["method"] == "enumerate"
    assert record["count"] == "1"


def test_verify_suite_exit_zero(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "pfaffian")
    assert code == 0
    outcomes = json.loads(out)
    assert outcomes[0]["suite"] == "pfaffian"
    assert outcomes[0]["failures"] == []
    assert "ok" in err


def test_verify_oracle_logs_arbitration(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "oracle", "--max-n", "1", "--max-x", "1")
    assert code == 0
    assert "1/3" in err


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--theorem", "2", "--max-n", "1", "--max-x", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,x,a,b,count,probability"
    assert "1,1,3,2,17,17/35" in lines


def test_table_theorem_3(capsys):
    code, out, _ = run_cli(capsys, "table", "--theorem", "3", "--max-n", "1", "--max-x", "0")
    assert code == 0
    assert "1,0,2,1,2,1/2" in out.strip().splitlines()


def test_table_json_round_trips(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--theorem", "2", "--max-n", "1", "--max-x", "2", "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert all(isinstance(row["count"], str) for row in rows)
    assert {"n": 1, "x": 1, "a": 3, "b": 2, "count": "17", "probability": "17/35"} in rows


def test_asympt_ratio_zero(capsys):
    code, out, _ = run_cli(capsys, "asympt", "--ratio", "0", "--n", "5,10")
    assert code == 0
    assert json.loads(out)["target"] == 1.0


def test_asympt_default_ns(capsys):
    code, out, _ = run_cli(capsys, "asympt", "--ratio", "1")
    assert code == 0
    report = json.loads(out)
    assert report["monotone_approach"] is True
    assert report["errors"][-1] < 0.02


def test_asympt_plot_writes_file(tmp_path, capsys):
    target = tmp_path / "report.png"
    code, _, _ = run_cli(capsys, "asympt", "--ratio", "1", "--n", "5,10", "--plot", str(target))
    assert code == 0
    assert target.stat().st_size > 0


def test_table_plot_writes_file(tmp_path, capsys):
    target = tmp_path / "table.png"
    code, _, _ = run_cli(
        capsys, "table", "--theorem", "2", "--max-n", "1", "--max-x", "2",
        "--plot", str(target),
    )
    assert code == 0
    assert target.stat().st_size > 0


def test_usage_error_exit_code(capsys):
    assert cli.main(["count", "--a", "1"]) == 2
    assert cli.main(["verify", "--suite", "nonsense"]) == 2


def test_verify_exits_nonzero_on_broken_invariant(capsys, monkeypatch):
    from fractions import Fraction

    from hexcensus import formulas

    true_q = formulas.q_factor
    monkeypatch.setattr(
        formulas, "q_factor", lambda n, x: true_q(n, x) + Fraction(1, 1000)
    )
    code, _, err = run_cli(capsys, "verify", "--suite", "theorems",
                           "--max-n", "1", "--max-x", "1")
    assert code == 1
    assert "FAIL" in err
