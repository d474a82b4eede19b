"""Readers for the crossband artifact schemas, with strict validation."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np


class PlotsError(ValueError):
    """Invalid or missing input artifact; the message names the path."""


def _rows(path: str, want_header: list[str], prefix: bool = False) -> list[list[str]]:
    p = Path(path)
    if not p.is_file():
        raise PlotsError(f"{path}: no such file")
    with open(p, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise PlotsError(f"{path}: empty file") from None
        ok = header[: len(want_header)] == want_header if prefix else header == want_header
        if not ok:
            raise PlotsError(
                f"{path}: header {','.join(header)!r} does not match "
                f"schema {','.join(want_header)!r}"
            )
        rows = [r for r in reader if r]
    if not rows:
        raise PlotsError(f"{path}: no data rows")
    return rows


def _floats(path: str, row: list[str]) -> list[float]:
    try:
        return [float(x) for x in row]
    except ValueError as exc:
        raise PlotsError(f"{path}: bad numeric row {row!r}") from exc


def read_band_grid(path: str) -> dict[str, np.ndarray]:
    """band_grid.csv -> flat alpha, xi, rho1 columns."""
    data = np.array([_floats(path, r) for r in _rows(path, ["alpha", "xi", "rho1"])])
    return {"alpha": data[:, 0], "xi": data[:, 1], "rho1": data[:, 2]}


def read_ladder(path: str) -> list[dict]:
    """kappa_ladder.csv -> rows with level, epsilon, kappas (failed rows skipped)."""
    out = []
    for row in _rows(path, ["l", "epsilon", "kappa1"], prefix=True):
        kappas = [float(x) for x in row[2:] if x.strip()]
        if kappas:
            out.append({"l": int(row[0]), "epsilon": float(row[1]), "kappas": kappas})
    if not out:
        raise PlotsError(f"{path}: every ladder row is marked failed")
    return out


def read_raster(path: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """modulus_*.csv -> raster axes and the |psi| field, shape (n_sigma, n_tau)."""
    data = np.array([_floats(path, r) for r in _rows(path, ["sigma", "tau", "abs_psi"])])
    sg = np.unique(data[:, 0])
    tg = np.unique(data[:, 1])
    if sg.size * tg.size != data.shape[0]:
        raise PlotsError(f"{path}: rows do not form a full raster grid")
    field = data[:, 2].reshape(sg.size, tg.size)
    return sg, tg, field


def read_min_json(path: str) -> dict:
    p = Path(path)
    if not p.is_file():
        raise PlotsError(f"{path}: no such file")
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise PlotsError(f"{path}: invalid JSON ({exc})") from exc
    missing = {"alpha0", "xi0", "S0"} - set(doc)
    if missing:
        raise PlotsError(f"{path}: missing keys {sorted(missing)}")
    return doc
