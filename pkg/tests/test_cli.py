import csv
import io
import json

import pytest

from sievedjacobi.cli import build_parser, main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_pass_exit_zero(capsys):
    code, out, err = run(
        capsys,
        ["check", "cmv", "--alpha", "0.5", "--beta", "1.5", "--N", "2", "--nmax", "6"],
    )
    assert code == 0
    assert "PASS cmv" in out


def test_check_fail_exit_one(capsys):
    # an absurdly tight tolerance forces a reported failure
    code, out, err = run(
        capsys,
        ["check", "cmv", "--N", "2", "--nmax", "6", "--tol", "1e-30"],
    )
    assert code == 1
    assert "FAIL cmv" in out


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["check", "not-a-suite"])
    assert exc.value.code == 2


def test_invalid_parameters_exit_three(capsys):
    code, out, err = run(
        capsys,
        ["check", "cmv", "--alpha", "-1.6", "--beta", "0.5", "--N", "2"],
    )
    assert code == 3
    assert "invalid" in err


def test_check_json_schema(capsys):
    code, out, err = run(
        capsys,
        ["check", "identities", "--N", "3", "--format", "json"],
    )
    assert code == 0
    data = json.loads(out)
    for key in ("suite", "params", "tolerance", "max_residual", "pass", "details"):
        assert key in data
    assert data["pass"] is True
    assert data["params"]["N"] == 3


def test_table_verblunsky_values(capsys):
    code, out, err = run(
        capsys,
        [
            "table", "verblunsky",
            "--alpha", "0", "--beta", "0", "--N", "1", "--nmax", "5",
            "--format", "csv",
        ],
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "a_n"]
    values = [float(r[1]) for r in rows[1:]]
    expected = [0.0, -1.0 / 3.0, 0.0, -1.0 / 5.0, 0.0, -1.0 / 7.0]
    assert all(abs(v - e) < 1e-12 for v, e in zip(values, expected))


def test_table_eigenvalues(capsys):
    code, out, err = run(
        capsys,
        [
            "table", "eigenvalues",
            "--alpha", "0", "--beta", "0", "--N", "2", "--nmax", "4",
            "--format", "json",
        ],
    )
    assert code == 0
    data = json.loads(out)
    lam = [row["lambda"] for row in data]
    assert lam == [0.0, 3.0, -1.0, 4.0, -2.0]


def test_table_recurrence_u_requires_special_case(capsys):
    code, out, err = run(
        capsys,
        ["table", "recurrence-u", "--alpha", "0.3", "--beta", "1.7", "--N", "3"],
    )
    assert code == 3
    assert "invalid" in err


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SIEVEDJACOBI_ALPHA", "0")
    monkeypatch.setenv("SIEVEDJACOBI_BETA", "0")
    monkeypatch.setenv("SIEVEDJACOBI_FORMAT", "csv")
    code, out, err = run(capsys, ["table", "verblunsky", "--N", "1", "--nmax", "1"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert abs(float(rows[2][1]) + 1.0 / 3.0) < 1e-12


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, err = run(
        capsys,
        [
            "check", "algebra", "--N", "2", "--format", "json",
            "--out", str(target),
        ],
    )
    assert code == 0
    data = json.loads(target.read_text())
    assert data["suite"] == "algebra"
    assert out == ""
