"""Acceptance gate for figure regeneration, one printed verdict line."""

import numpy as np

from bandplots.figures import FigureSpec, axis_slice, render
from bandplots.io import read_band_grid, read_ladder


def test_figure_regeneration(artifacts, tmp_path, capsys):
    problems = []

    for figure, source, extra in [
        ("fig1", "grid2d", {}),
        ("fig2", "axis", {}),
        ("fig3", "ladder", {"min_json": str(artifacts["min_json"])}),
        ("fig4", "raster", {"epsilon": 0.5, "alpha0": 0.78628}),
        ("fig5", "raster", {"epsilon": 0.5, "alpha0": 0.78628}),
    ]:
        out = tmp_path / f"{figure}.png"
        try:
            render(FigureSpec(figure=figure, data_path=str(artifacts[source]),
                              out_path=str(out), **extra))
            if not out.read_bytes().startswith(b"\x89PNG"):
                problems.append(f"{figure}: not a PNG")
        except Exception as exc:
            problems.append(f"{figure}: {exc}")

    alpha, rho = axis_slice(read_band_grid(artifacts["axis"]))
    mid = int(np.argmin(np.abs(alpha)))
    left, right = int(np.argmin(rho[:mid])), mid + int(np.argmin(rho[mid:]))
    if not (rho[mid] > rho[mid - 1] and rho[mid] > rho[mid + 1]):
        problems.append("fig2 slice: no local max at alpha=0")
    if not (abs(alpha[left] + alpha[right]) < 1e-12 and rho[right] < rho[mid]):
        problems.append("fig2 slice: minima not symmetric")

    n_rows = len(read_ladder(artifacts["ladder"]))
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots()
    try:
        from bandplots import figures

        figures._fig3(FigureSpec(figure="fig3", data_path=str(artifacts["ladder"]),
                                 out_path="unused.png",
                                 min_json=str(artifacts["min_json"])), ax)
        if len(ax.lines[0].get_xdata()) != n_rows:
            problems.append("fig3: point count != ladder length")
    finally:
        plt.close(fig)

    ok = not problems
    with capsys.disabled():
        print(f"\n[ACCEPTANCE] {'PASS' if ok else 'FAIL'} figure regeneration: "
              f"fig1-fig5 render, fig2 extrema, fig3 point count"
              + (f" (problems: {problems})" if problems else ""))
    assert ok, problems
