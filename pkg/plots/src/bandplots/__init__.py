"""Figure regeneration from crossband CSV/JSON artifacts.

Pure file transforms: every figure is rendered from the primary package's
artifacts (band_grid.csv, min_result.json, kappa_ladder.csv, modulus_*.csv)
plus explicit overlay parameters; nothing is recomputed from eigen data.
"""

from .figures import DEFAULT_STYLE, FIGURE_IDS, FigureSpec, axis_slice, render
from .io import (
    PlotsError,
    read_band_grid,
    read_ladder,
    read_min_json,
    read_raster,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_STYLE",
    "FIGURE_IDS",
    "FigureSpec",
    "PlotsError",
    "axis_slice",
    "read_band_grid",
    "read_ladder",
    "read_min_json",
    "read_raster",
    "render",
]
