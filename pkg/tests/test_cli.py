import json

import numpy as np
import pytest

from crossband import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------- usage

def test_no_command_is_a_usage_error(capsys):
    code, _, err = run(capsys, )
    assert code == 1
    assert "usage" in err


def test_unknown_command_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1


def test_unknown_config_key_is_a_usage_error(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"degrees": [1], "nonsense": True}))
    code, _, err = run(capsys, "--config", str(cfg), "table1")
    assert code == 1
    assert "nonsense" in err


def test_missing_config_file_is_a_usage_error(tmp_path, capsys):
    code, _, _ = run(capsys, "--config", str(tmp_path / "absent.json"), "table1")
    assert code == 1


# ---------------------------------------------------------------- table1

def test_table1_single_degree(tmp_path, capsys):
    out = tmp_path / "table1.csv"
    code, stdout, _ = run(capsys, "table1", "--degrees", "1", "--out", str(out))
    assert code == 0
    assert "Q= 1" in stdout
    lines = out.read_text().splitlines()
    assert lines[0] == "Q,rho1_00,alpha0,rho1_alpha0"
    q, r00, a, ra = lines[1].split(",")
    assert q == "1"
    assert float(r00) == pytest.approx(0.716813090776313, rel=1e-12)
    assert float(a) == 0.794


def test_table1_quiet_suppresses_stdout(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code, stdout, _ = run(capsys, "table1", "--degrees", "2,3", "--out", str(out), "--quiet")
    assert code == 0
    assert stdout == ""


def test_table1_config_sets_degrees(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    out = tmp_path / "t.csv"
    cfg.write_text(json.dumps({"degrees": [4], "out": str(out), "quiet": True}))
    code, stdout, _ = run(capsys, "--config", str(cfg), "table1")
    assert code == 0
    assert stdout == ""
    assert out.read_text().splitlines()[1].startswith("4,")


def test_table1_tolerance_miss_exits_2(tmp_path, capsys, monkeypatch):
    from crossband import band as band_mod

    real = band_mod.table1_rows

    def skewed(degrees):
        return [(q, r00 * (1 + 1e-9), aq, ra) for q, r00, aq, ra in real(degrees)]

    monkeypatch.setattr(cli.band, "table1_rows", skewed)
    code, stdout, _ = run(capsys, "table1", "--degrees", "1", "--out", str(tmp_path / "t.csv"))
    assert code == 2
    assert "FAIL" in stdout


# ---------------------------------------------------------------- band-scan

def test_band_scan_axis_only(tmp_path, capsys):
    code, stdout, _ = run(
        capsys, "band-scan", "--axis-only", "--step", "0.1",
        "--refine", "2", "--out-dir", str(tmp_path),
    )
    assert code == 0
    assert "alpha0=" in stdout
    grid = np.loadtxt(tmp_path / "band_grid.csv", delimiter=",", skiprows=1)
    assert grid.shape == (41, 3)
    assert np.all(grid[:, 1] == 0.0)
    doc = json.loads((tmp_path / "min_result.json").read_text())
    assert doc["xi0"] == 0.0
    assert doc["alpha0"] == pytest.approx(0.78628, abs=2e-3)
    assert doc["S0"] == pytest.approx(0.49410921120, abs=1e-5)
    assert len(doc["history"]) == 3


def test_band_scan_window_refinement(tmp_path, capsys):
    code, _, _ = run(
        capsys, "band-scan", "--axis-only", "--step", "0.1", "--refine", "1",
        "--window", "0.786,0.787", "--out-dir", str(tmp_path), "--quiet",
    )
    assert code == 0
    doc = json.loads((tmp_path / "min_result.json").read_text())
    assert doc["alpha0"] == pytest.approx(0.78628, abs=2e-5)
    assert doc["S0"] == pytest.approx(0.49410921120, abs=1e-9)


def test_band_scan_refine_zero_reports_grid_minimum(tmp_path, capsys):
    code, _, _ = run(
        capsys, "band-scan", "--axis-only", "--step", "0.5",
        "--refine", "0", "--out-dir", str(tmp_path), "--quiet",
    )
    assert code == 0
    doc = json.loads((tmp_path / "min_result.json").read_text())
    assert doc["alpha0"] in (0.5, 1.0)
    assert len(doc["history"]) == 1


# ---------------------------------------------------------------- kappa-ladder

def test_kappa_ladder_single_level(tmp_path, capsys):
    code, stdout, _ = run(
        capsys, "kappa-ladder", "--l", "0", "--neigs", "3",
        "--degree", "6", "--out-dir", str(tmp_path),
    )
    assert code == 0
    assert "l= 0" in stdout
    lines = (tmp_path / "kappa_ladder.csv").read_text().splitlines()
    assert lines[0] == "l,epsilon,kappa1,kappa2,kappa3"
    row = lines[1].split(",")
    kappas = [float(x) for x in row[2:]]
    assert kappas == sorted(kappas)
    assert kappas[0] == pytest.approx(0.7039, abs=5e-4)


def test_kappa_ladder_writes_rasters(tmp_path, capsys):
    code, _, _ = run(
        capsys, "kappa-ladder", "--l", "0", "--degree", "6", "--rasters",
        "--resolution", "11", "--out-dir", str(tmp_path), "--quiet",
    )
    assert code == 0
    lines = (tmp_path / "modulus_0.csv").read_text().splitlines()
    assert lines[0] == "sigma,tau,abs_psi"
    assert len(lines) == 1 + 11 * 11


# ---------------------------------------------------------------- quasimode

def test_quasimode_requires_epsilons(tmp_path, capsys):
    code, _, err = run(capsys, "quasimode", "--epsilons", "", "--quiet")
    assert code == 1
    assert "epsilon" in err


def test_quasimode_single_epsilon_report(tmp_path, capsys):
    out = tmp_path / "q.json"
    code, _, _ = run(capsys, "quasimode", "--epsilons", "0.0625", "--out", str(out), "--quiet")
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["epsilons"] == [0.0625]
    assert doc["alpha0"] == pytest.approx(0.78628, abs=1e-4)
    assert doc["S0"] == pytest.approx(0.49410921120, abs=1e-9)
    assert len(doc["residual_ratios"]) == 1
    assert 0 < doc["residual_ratios"][0] < 1
    assert "slope" not in doc


# ---------------------------------------------------------------- lambda-set / ppstar

def test_lambda_set_requires_points(capsys):
    code, _, err = run(capsys, "lambda-set")
    assert code == 1
    assert "points" in err


def test_lambda_set_from_points_file(tmp_path, capsys):
    pts = tmp_path / "points.json"
    pts.write_text(json.dumps([
        {"label": "a", "epsilon": 0.5, "Xi": 1.0},
        {"label": "b", "epsilon": 0.5, "Xi": 4.0},
    ]))
    out = tmp_path / "lambda.json"
    code, stdout, _ = run(
        capsys, "lambda-set", "--points", str(pts), "--n", "1",
        "--degree", "4", "--out", str(out),
    )
    assert code == 0
    assert "2 entries" in stdout
    doc = json.loads(out.read_text())
    values = [e["value"] for e in doc["entries"]]
    assert values == sorted(values)
    # Xi = 4 doubles the scaled value of the same model eigenvalue
    assert values[1] == pytest.approx(2 * values[0], rel=1e-10)


def test_ppstar_outputs_bounds(tmp_path, capsys):
    out = tmp_path / "pp.json"
    code, stdout, _ = run(
        capsys, "ppstar", "--mu-list", "1.0,3.0", "--mu", "0.1", "--nu", "0.05",
        "--out", str(out),
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["bounds"] == pytest.approx([1.1 / 0.95, 3.2 / 0.9], rel=1e-12)
    assert json.loads(stdout)["bounds"] == doc["bounds"]


def test_ppstar_requires_mu_list(capsys):
    code, _, err = run(capsys, "ppstar")
    assert code == 1
    assert "mu-list" in err


def test_ppstar_invalid_nu_is_usage_error(capsys):
    code, _, err = run(capsys, "ppstar", "--mu-list", "1,2,3", "--nu", "0.5")
    assert code == 1
    assert "1/N" in err
