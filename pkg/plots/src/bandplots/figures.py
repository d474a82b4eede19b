"""The five figures: contour map, axis slice, convergence plot, rasters."""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .io import PlotsError, read_band_grid, read_ladder, read_min_json, read_raster

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5")

# pinned style: identical inputs must give identical image bytes
DEFAULT_STYLE = {
    "figure.figsize": (6.0, 4.5),
    "figure.dpi": 130,
    "savefig.dpi": 130,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
}


@dataclass(frozen=True)
class FigureSpec:
    figure: str                      # one of FIGURE_IDS
    data_path: str                   # main CSV artifact
    out_path: str                    # image file to write
    min_json: str | None = None      # min_result.json (fig3 default constant)
    s0: float | None = None          # overrides the fig3 constant
    epsilon: float | None = None     # overlay geometry for fig4/fig5
    alpha0: float | None = None
    style: dict = field(default_factory=lambda: dict(DEFAULT_STYLE))

    def __post_init__(self):
        if self.figure not in FIGURE_IDS:
            raise PlotsError(f"unknown figure id {self.figure!r}")


def axis_slice(band: dict[str, np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """The xi = 0 slice of a band grid, sorted by alpha."""
    on_axis = band["xi"] == 0.0
    if not on_axis.any():
        raise PlotsError("band grid has no xi = 0 rows; run an axis-only scan")
    order = np.argsort(band["alpha"][on_axis])
    return band["alpha"][on_axis][order], band["rho1"][on_axis][order]


def _grid_axes(band):
    alphas = np.unique(band["alpha"])
    xis = np.unique(band["xi"])
    if alphas.size * xis.size != band["rho1"].size:
        raise PlotsError("band grid rows do not form a full tensor grid")
    return alphas, xis, band["rho1"].reshape(alphas.size, xis.size)


def _fig1(spec, ax):
    alphas, xis, rho = _grid_axes(read_band_grid(spec.data_path))
    if xis.size < 2:
        raise PlotsError(f"{spec.data_path}: contour map needs a 2D scan")
    cs = ax.contour(alphas, xis, rho.T, levels=12, cmap="viridis")
    ax.clabel(cs, inline=True, fontsize=7, fmt="%.3f")
    a = np.linspace(alphas[0], alphas[-1], 400)
    for sign in (1.0, -1.0):
        ax.plot(a, sign * 2.0 * a ** 3 / 3.0, "k--", lw=0.8)
    ax.set_xlim(alphas[0], alphas[-1])
    ax.set_ylim(xis[0], xis[-1])
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$\xi$")
    ax.set_title(r"ground energy $\rho_1(\alpha,\xi)$ with $\xi=\pm\frac{2}{3}\alpha^3$")


def _fig2(spec, ax):
    a, r = axis_slice(read_band_grid(spec.data_path))
    ax.plot(a, r, "-", color="tab:blue")
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$\rho_1(\alpha,0)$")
    ax.set_title(r"band function on the axis $\xi=0$")


def _fig3(spec, ax):
    rows = read_ladder(spec.data_path)
    if spec.s0 is not None:
        s0 = float(spec.s0)
    elif spec.min_json is not None:
        s0 = float(read_min_json(spec.min_json)["S0"])
    else:
        raise PlotsError("fig3 needs --s0 or --min-json for the limit constant")
    eps = np.array([r["epsilon"] for r in rows])
    gap = np.array([r["kappas"][0] - s0 for r in rows])
    if np.any(gap <= 0):
        raise PlotsError(
            f"{spec.data_path}: kappa1 - {s0} is not positive on every row"
        )
    ax.plot(np.log2(eps), np.log2(gap), "o-", color="tab:red")
    ax.set_xlabel(r"$\log_2 \varepsilon_\ell$")
    ax.set_ylabel(rf"$\log_2(\varkappa_1(\varepsilon_\ell) - {s0:.4f})$")
    ax.set_title("first-order convergence of the ladder")


def _fig_raster(spec, ax):
    if spec.epsilon is None or spec.alpha0 is None:
        raise PlotsError(f"{spec.figure} needs --epsilon and --alpha0 for the overlay")
    sg, tg, f = read_raster(spec.data_path)
    ax.pcolormesh(sg, tg, f.T, cmap="magma", shading="nearest")
    # zero-set cross and localization centers, from the given parameters only
    s = np.array([sg[0], sg[-1]])
    for sign in (1.0, -1.0):
        ax.plot(s, sign * spec.epsilon * s, color="white", lw=0.8)
    for sign in (1.0, -1.0):
        c = sign * spec.alpha0 / spec.epsilon
        if sg[0] <= c <= sg[-1]:
            ax.plot([c], [0.0], "o", color="white", ms=4)
    ax.set_xlim(sg[0], sg[-1])
    ax.set_ylim(tg[0], tg[-1])
    ax.set_xlabel(r"$\sigma$")
    ax.set_ylabel(r"$\tau$")
    ax.set_title(rf"$|\psi|$ with zero-set cross, $\varepsilon={spec.epsilon:g}$")
    ax.grid(False)


_RENDERERS = {
    "fig1": _fig1,
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig_raster,
    "fig5": _fig_raster,
}


def render(spec: FigureSpec) -> str:
    """Render the figure and write the image; returns the output path."""
    with matplotlib.rc_context(spec.style):
        fig, ax = plt.subplots()
        try:
            _RENDERERS[spec.figure](spec, ax)
            fig.tight_layout()
            fig.savefig(spec.out_path, metadata={"Software": "bandplots"})
        finally:
            plt.close(fig)
    return spec.out_path
