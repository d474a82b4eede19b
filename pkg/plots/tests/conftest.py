import subprocess
import sys

import pytest


def _crossband(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "crossband.cli", *args],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, f"crossband {' '.join(args)}: {proc.stderr}"


@pytest.fixture(scope="session")
def artifacts(tmp_path_factory):
    """Real primary artifacts, produced through the crossband CLI only."""
    d = tmp_path_factory.mktemp("artifacts")
    _crossband("band-scan", "--step", "0.1", "--refine", "1",
               "--out-dir", str(d / "grid2d"), "--quiet")
    _crossband("band-scan", "--axis-only", "--step", "0.05", "--refine", "2",
               "--out-dir", str(d / "axis"), "--quiet")
    _crossband("kappa-ladder", "--lmax", "4", "--degree", "6",
               "--out-dir", str(d / "ladder"), "--quiet")
    _crossband("kappa-ladder", "--l", "0", "--degree", "6", "--rasters",
               "--resolution", "31", "--out-dir", str(d / "raster"), "--quiet")
    return {
        "grid2d": d / "grid2d" / "band_grid.csv",
        "axis": d / "axis" / "band_grid.csv",
        "min_json": d / "axis" / "min_result.json",
        "ladder": d / "ladder" / "kappa_ladder.csv",
        "raster": d / "raster" / "modulus_0.csv",
    }
