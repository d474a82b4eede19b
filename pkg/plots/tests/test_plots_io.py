import numpy as np
import pytest

from bandplots.io import (
    PlotsError,
    read_band_grid,
    read_ladder,
    read_min_json,
    read_raster,
)


def test_band_grid_roundtrip(tmp_path):
    p = tmp_path / "band_grid.csv"
    p.write_text("alpha,xi,rho1\n0,0,0.66\n0.5,0,0.55\n")
    band = read_band_grid(p)
    assert band["alpha"].tolist() == [0.0, 0.5]
    assert band["rho1"].tolist() == [0.66, 0.55]


@pytest.mark.parametrize(
    "content,match",
    [
        ("", "empty file"),
        ("alpha,xi\n0,0\n", "schema"),
        ("alpha,xi,rho1\n", "no data rows"),
        ("alpha,xi,rho1\n0,0,abc\n", "bad numeric"),
    ],
)
def test_band_grid_rejects_malformed(tmp_path, content, match):
    p = tmp_path / "band_grid.csv"
    p.write_text(content)
    with pytest.raises(PlotsError, match=match):
        read_band_grid(p)


def test_band_grid_missing_file_names_path(tmp_path):
    with pytest.raises(PlotsError, match="absent.csv"):
        read_band_grid(tmp_path / "absent.csv")


def test_ladder_skips_failed_rows(tmp_path):
    p = tmp_path / "kappa_ladder.csv"
    p.write_text("l,epsilon,kappa1,kappa2\n0,0.5,0.7039,1.07\n1,0.35,,\n2,0.25,0.6266,\n")
    rows = read_ladder(p)
    assert [r["l"] for r in rows] == [0, 2]
    assert rows[0]["kappas"] == [0.7039, 1.07]
    assert rows[1]["kappas"] == [0.6266]


def test_ladder_all_failed_is_an_error(tmp_path):
    p = tmp_path / "kappa_ladder.csv"
    p.write_text("l,epsilon,kappa1\n0,0.5,\n")
    with pytest.raises(PlotsError, match="failed"):
        read_ladder(p)


def test_raster_pivots_to_grid(tmp_path):
    p = tmp_path / "modulus_0.csv"
    p.write_text(
        "sigma,tau,abs_psi\n0,-1,1\n0,1,2\n1,-1,3\n1,1,4\n"
    )
    sg, tg, f = read_raster(p)
    assert sg.tolist() == [0.0, 1.0]
    assert tg.tolist() == [-1.0, 1.0]
    assert np.array_equal(f, [[1.0, 2.0], [3.0, 4.0]])


def test_raster_rejects_ragged_grid(tmp_path):
    p = tmp_path / "modulus_0.csv"
    p.write_text("sigma,tau,abs_psi\n0,-1,1\n0,1,2\n1,-1,3\n")
    with pytest.raises(PlotsError, match="raster grid"):
        read_raster(p)


def test_min_json_validation(tmp_path):
    p = tmp_path / "min_result.json"
    p.write_text('{"alpha0": 0.78628, "xi0": 0.0, "S0": 0.4941}')
    assert read_min_json(p)["S0"] == 0.4941
    p.write_text('{"alpha0": 0.78628}')
    with pytest.raises(PlotsError, match="missing keys"):
        read_min_json(p)
    p.write_text("not json")
    with pytest.raises(PlotsError, match="invalid JSON"):
        read_min_json(p)
    with pytest.raises(PlotsError, match="no such file"):
        read_min_json(tmp_path / "gone.json")
