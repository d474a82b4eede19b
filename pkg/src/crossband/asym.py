"""Semiclassical bookkeeping: eigenvalue scaling, merged level sets,
reciprocal-quasimode bounds, and the small-angle quasimode residual.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import scipy.sparse.linalg as spla

from . import assemble, cross2d, symbol
from .errors import NumericError, ParameterError
from .mesh import SpectralMesh1D, build_mesh


@dataclass(frozen=True)
class CrossingPoint:
    label: str
    epsilon: float
    Xi: float

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0:
            raise ParameterError(
                f"{self.label}: epsilon must lie in (0, 1] (eigenvalue-ordering convention)"
            )
        if self.Xi <= 0.0:
            raise ParameterError(f"{self.label}: Xi must be positive")


@dataclass(frozen=True)
class LambdaEntry:
    value: float
    label: str
    n: int


@dataclass(frozen=True)
class LambdaSet:
    entries: tuple[LambdaEntry, ...]   # ascending by value, ties kept

    @property
    def leading(self) -> float:
        return self.entries[0].value


def scale_eigenvalue(kappa: float, Xi: float, h: float) -> float:
    """Model eigenvalue -> semiclassical eigenvalue h^{3/2} Xi^{1/2} kappa."""
    if kappa <= 0 or Xi <= 0 or h <= 0:
        raise ParameterError("scale_eigenvalue requires positive kappa, Xi, h")
    return h ** 1.5 * np.sqrt(Xi) * kappa


def build_lambda_set(
    points: Sequence[CrossingPoint],
    n_per_point: int,
    kappa_solver: Callable[[float], Sequence[float]],
) -> LambdaSet:
    """Merge the scaled model eigenvalues of all crossing points, ascending."""
    if not points:
        raise ParameterError("at least one crossing point is required")
    entries = []
    for pt in points:
        try:
            kappas = list(kappa_solver(pt.epsilon))[:n_per_point]
        except Exception as exc:
            raise NumericError(f"solver failed at crossing point {pt.label!r}: {exc}") from exc
        if sorted(kappas) != kappas or len(kappas) < n_per_point:
            raise NumericError(f"solver returned a bad eigenvalue list for {pt.label!r}")
        entries.extend(
            LambdaEntry(value=float(np.sqrt(pt.Xi) * k), label=pt.label, n=i + 1)
            for i, k in enumerate(kappas)
        )
    entries.sort(key=lambda e: e.value)
    return LambdaSet(entries=tuple(entries))


def ppstar_bound(mu_list: Sequence[float], mu: float, nu: float) -> list[float]:
    """Upper bounds (mu_n + n mu) / (1 - n nu) from reciprocal quasimodes."""
    N = len(mu_list)
    if mu < 0 or nu < 0:
        raise ParameterError("perturbation sizes mu, nu must be nonnegative")
    if nu >= 1.0 / N:
        raise ParameterError(f"nu={nu} violates nu < 1/N with N={N}")
    return [(m + (n + 1) * mu) / (1.0 - (n + 1) * nu) for n, m in enumerate(mu_list)]


def _gaussian(s):
    return np.exp(-0.5 * np.asarray(s) ** 2)


def _dgaussian(s):
    s = np.asarray(s)
    return -s * np.exp(-0.5 * s ** 2)


GRADIENT_TOL = 1e-2


def quasimode_residual(
    epsilon: float,
    alpha0: float,
    xi0: float = 0.0,
    f0: Callable | None = None,
    df0: Callable | None = None,
    mesh_s: SpectralMesh1D | None = None,
    mesh_t: SpectralMesh1D | None = None,
    fd_step: float = 1e-4,
    omit_psi1: bool = False,
) -> float:
    """Residual ratio of the two-term small-angle quasimode.

    Builds psi = f0 x u0 + sqrt(eps) * (-i f0' x du/dalpha + s f0 x du/dxi)
    on the blown-up (s, t) mesh and returns
    ||(L_eps - S0) psi||_{M^{-1}} / ||psi||_M  for the localized operator
    L_eps = D_t^2 + (xi0 + sqrt(eps) D_s + eps s^2 t + 2 sqrt(eps) alpha0 s t
    + alpha0^2 t - t^3/3)^2.

    The parameter derivatives of the ground state use central differences of
    phase-fixed eigenvectors; (alpha0, xi0) must be a critical point of the
    band function.
    """
    if mesh_t is None:
        mesh_t = symbol.default_mesh()
    if mesh_s is None:
        mesh_s = build_mesh(-10.0, 10.0, 20, 10)
    if f0 is None:
        f0, df0 = _gaussian, _dgaussian

    p0 = symbol.SymbolParams(alpha0, xi0)
    g0 = symbol.ground_state(p0, mesh_t)
    grad = float(np.hypot(*symbol.fh_gradient(g0, p0)))
    if grad > GRADIENT_TOL:
        raise ParameterError(
            f"({alpha0}, {xi0}) is not a band-function critical point: |grad rho1| = {grad:.3e}"
        )
    s0_disc = g0.rho1  # discrete minimum on this mesh

    def u_at(a, x):
        return symbol.ground_state(symbol.SymbolParams(a, x), mesh_t).u

    du_da = (u_at(alpha0 + fd_step, xi0) - u_at(alpha0 - fd_step, xi0)) / (2 * fd_step)
    du_dx = (u_at(alpha0, xi0 + fd_step) - u_at(alpha0, xi0 - fd_step)) / (2 * fd_step)

    re = np.sqrt(epsilon)
    wterms = (
        (1.0, lambda t: xi0 + alpha0 ** 2 * t - t ** 3 / 3.0),
        (lambda s: epsilon * s ** 2, lambda t: t),
        (lambda s: 2.0 * re * alpha0 * s, lambda t: t),
    )
    sys = cross2d.assemble_tensor_operator(mesh_s, mesh_t, re, wterms)

    sn = mesh_s.nodes
    f0n = np.asarray(f0(sn), dtype=float)
    if df0 is not None:
        df0n = np.asarray(df0(sn), dtype=float)
    else:
        df0n = np.gradient(f0n, sn)
    # first-order corrector: the s-derivative of the envelope pairs with the
    # xi-derivative of the ground state and vice versa, so that each block
    # cancels the matching first-order coupling term
    psi = np.outer(f0n, g0.u).astype(complex)
    if not omit_psi1:
        psi += re * (np.outer(-1j * df0n, du_dx) + np.outer(sn * f0n, du_da))
    v = psi.reshape(-1)

    r = sys.H @ v - s0_disc * (sys.M @ v)
    Mfact = spla.splu(sys.M.tocsc().astype(complex))
    num = np.sqrt((r.conj() @ Mfact.solve(r)).real)
    den = np.sqrt((v.conj() @ (sys.M @ v)).real)
    return float(num / den)


def residual_slope(epsilons: Sequence[float], residuals: Sequence[float]) -> float:
    """Least-squares slope of log residual against log epsilon."""
    return float(np.polyfit(np.log(epsilons), np.log(residuals), 1)[0])


def write_lambda_json(ls: LambdaSet, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(
            {"entries": [{"value": e.value, "label": e.label, "n": e.n} for e in ls.entries]},
            fh, indent=2,
        )
        fh.write("\n")


def write_quasimode_json(report: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
