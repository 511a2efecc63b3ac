from __future__ import annotations

import json

import numpy as np
import pytest

from rieszsc.cli import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main


def _rows(path):
    lines = path.read_text().split("\n")
    assert lines[-1] == ""
    return lines[0].split(","), [l.split(",") for l in lines[1:-1]]


def test_error_curve_lobatto(tmp_path):
    out = tmp_path / "curve.csv"
    assert main(["error-curve", "--flavor", "lobatto", "--fn", "poly9", "--alpha", "0.5",
                 "--n", "11", "--out", str(out)]) == EXIT_OK
    header, rows = _rows(out)
    assert header == ["x", "error"] and len(rows) == 2001
    assert rows[0][0] == "%.16e" % (-1 + 1e-6)
    pheader, prow = _rows(tmp_path / "curve_points.csv")
    assert pheader == ["xi", "error_at_xi"] and len(prow) == 12
    assert b"\r" not in out.read_bytes()


def test_error_curve_zero_case(tmp_path):
    out = tmp_path / "z.csv"
    assert main(["error-curve", "--fn", "poly9", "--alpha", "0.5", "--n", "18", "--out", str(out)]) == 0
    _, rows = _rows(out)
    assert max(abs(float(r[1])) for r in rows) < 1e-9


def test_error_curve_deterministic(tmp_path):
    args = ["error-curve", "--flavor", "gjf", "--fn", "runge-shift", "--alpha", "1.7", "--n", "10",
            "--grid", "301"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a_points.csv").read_bytes() == (tmp_path / "b_points.csv").read_bytes()


def test_error_curve_multi_pairs(tmp_path):
    out = tmp_path / "m.csv"
    assert main(["error-curve", "--flavor", "gjf", "--fn", "fde-true", "--alpha", "0.4,1.3",
                 "--n", "6,8", "--grid", "11", "--out", str(out)]) == 0
    header, rows = _rows(out)
    assert header == ["alpha", "N", "x", "error"] and len(rows) == 44
    assert [r[1] for r in rows[::11]] == ["6", "8", "6", "8"]


@pytest.mark.parametrize(
    "argv",
    [
        ["error-curve", "--fn", "nope", "--alpha", "0.5", "--n", "5"],
        ["error-curve", "--fn", "poly9", "--alpha", "1.5", "--n", "5"],
        ["error-curve", "--fn", "poly9", "--alpha", "2", "--n", "5", "--flavor", "gjf"],
        ["error-curve", "--alpha", "0.5"],
        ["error-curve", "--alpha", "x", "--n", "4"],
        ["solve", "--alpha", "0.5", "--n", "5"],
        ["superconv-points", "--flavor", "gjf", "--alpha", "2.5", "--n", "1"],
        ["c0-decay", "--alpha", "2.5"],
        ["bogus"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_ratio_study_json(capsys):
    assert main(["ratio-study", "--method", "colloc", "--fn", "fde-true", "--alpha", "1.5",
                 "--n", "9,11,13", "--grid", "201", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["N"] for r in data["records"]] == [9, 11, 13]
    assert data["slopes"][0]["alpha"] == 1.5 and data["slopes"][0]["slope"] > 2


def test_ratio_study_csv_with_slopes(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["ratio-study", "--flavor", "lobatto", "--alpha", "0.5", "--n", "8,10",
                 "--grid", "201", "--out", str(out)]) == 0
    header, rows = _rows(out)
    assert header[:3] == ["alpha", "N", "flavor"] and len(rows) == 2
    _, slopes = _rows(tmp_path / "r_slopes.csv")
    assert len(slopes) == 1


def test_solve_outputs(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["solve", "--method", "colloc", "--fn", "mode:3", "--alpha", "1.84", "--n", "17",
                 "--grid", "101", "--out", str(out)]) == 0
    header, rows = _rows(tmp_path / "s_report.csv")
    rec = dict(zip(header, rows[0]))
    assert float(rec["max_nodal_error"]) < 1e-9
    _, coeffs = _rows(tmp_path / "s_coeffs.csv")
    assert len(coeffs) == 18


def test_solve_json(capsys):
    assert main(["solve", "--method", "pg", "--alpha", "1.27", "--n", "13", "--grid", "101",
                 "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)[0]
    assert rec["method"] == "pg" and len(rec["coeffs"]) == 14
    assert rec["ratio_report"]["ratio"] > 1


def test_solve_numerical_failure(monkeypatch):
    import rieszsc.fde_solver as fs

    monkeypatch.setattr(fs, "CONDITION_LIMIT", 1.0)
    assert main(["solve", "--method", "colloc", "--alpha", "1.5", "--n", "6", "--grid", "11"]) == EXIT_NUMERIC


def test_c0_decay_and_points(capsys):
    assert main(["c0-decay", "--alpha", "1.99", "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)[0]
    assert len(rep["ns"]) == 10 and rep["slope"] < -0.8
    assert main(["superconv-points", "--alpha", "0.5", "--n", "11"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "alpha,N,index,xi" and len(lines) == 13
    xi = np.array([float(l.split(",")[3]) for l in lines[1:]])
    np.testing.assert_allclose(xi, -xi[::-1], atol=1e-9)
