"""The 1D operator-symbol family: sextic potential, cubic roots, ground state.

The fiber operator is D_t^2 + (xi + alpha^2 t - t^3/3)^2. Its potential is
even in alpha and satisfies V(alpha, -xi, t) = V(alpha, xi, -t), so parameter
studies reduce to the first quadrant of the (alpha, xi) plane.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

import numpy as np

from . import assemble
from .eigen import EigenResult1D, solve_dense_sym
from .errors import DomainError, NumericError
from .mesh import SpectralMesh1D, build_mesh

_J = complex(-0.5, 0.5 * np.sqrt(3.0))  # exp(2i pi/3)

SIMPLICITY_GAP = 1e-8


@dataclass(frozen=True)
class SymbolParams:
    alpha: float
    xi: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and np.isfinite(self.xi)):
            raise DomainError(f"non-finite parameters ({self.alpha}, {self.xi})")


class RootRegime(enum.Enum):
    THREE_REAL = "three_real"
    DOUBLE_ROOT = "double_root"
    ONE_REAL = "one_real"


@dataclass(frozen=True)
class CubicRoots:
    regime: RootRegime
    t1: complex
    t2: complex
    t3: complex
    discriminant: float
    degenerate: bool = False  # triple root at the origin of parameter space


class Region(enum.Enum):
    CIRC = "circ"
    SHARP = "sharp"
    FLAT = "flat"
    INSIDE = "inside"


@dataclass(frozen=True)
class GroundState:
    rho1: float
    u: np.ndarray              # mass-normalized, positive at its peak node
    mesh: SpectralMesh1D
    gap: float                 # distance to the second eigenvalue
    result: EigenResult1D


def default_mesh() -> SpectralMesh1D:
    return build_mesh(-5.0, 5.0, 10, 10)


def generator(p: SymbolParams, t):
    """The cubic xi + alpha^2 t - t^3/3 whose square is the potential."""
    t = np.asarray(t, dtype=float)
    return p.xi + p.alpha ** 2 * t - t ** 3 / 3.0


def potential(p: SymbolParams, t):
    return generator(p, t) ** 2


def roots(p: SymbolParams) -> CubicRoots:
    """Closed-form roots of the generating cubic, first quadrant only."""
    a, xi = p.alpha, p.xi
    if a < 0 or xi < 0:
        raise DomainError(
            "roots() requires alpha >= 0 and xi >= 0; reduce by the potential symmetry first"
        )
    disc = 4.0 * a ** 6 - 9.0 * xi ** 2
    if a == 0.0 and xi == 0.0:
        return CubicRoots(RootRegime.DOUBLE_ROOT, 0j, 0j, 0j, 0.0, degenerate=True)
    if disc > 0.0:  # xi < 2 alpha^3 / 3: three distinct real roots
        s = np.sqrt(disc)
        cp = (0.5 * (3.0 * xi + 1j * s)) ** (1.0 / 3.0)
        cm = (0.5 * (3.0 * xi - 1j * s)) ** (1.0 / 3.0)
        tks = [(_J ** (3 - k)) * cp + (_J ** (k - 3)) * cm for k in (1, 2, 3)]
        t1, t2, t3 = (complex(t.real, 0.0) for t in tks)
        return CubicRoots(RootRegime.THREE_REAL, t1, t2, t3, disc)
    if disc == 0.0:
        return CubicRoots(RootRegime.DOUBLE_ROOT, complex(-a), complex(-a), complex(2 * a), disc)
    s = np.sqrt(-disc)
    # The two cube-root factors multiply to exactly alpha^2, so the smaller
    # one is recovered by division; forming (3 xi - s)/2 directly cancels
    # catastrophically when alpha^6 << xi^2.
    c = (0.5 * (3.0 * xi + s)) ** (1.0 / 3.0)
    t3 = c + a * a / c
    # remaining pair: roots of the quadratic cofactor t^2/3 + t3 t/3 + xi/t3
    half = -0.5 * t3
    imag = 0.5 * np.sqrt(12.0 * xi / t3 - t3 ** 2)
    return CubicRoots(
        RootRegime.ONE_REAL, complex(half, -imag), complex(half, imag), complex(t3), disc
    )


def factor_N(p: SymbolParams, t):
    """Quadratic cofactor N with  generator(t) = -N(t) (t - t3)."""
    a, xi = p.alpha, p.xi
    if a < 0 or xi < 0:
        raise DomainError("factor_N requires alpha >= 0 and xi >= 0")
    if a == 0.0 and xi == 0.0:
        raise DomainError("factor_N undefined at (0, 0): the real root t3 vanishes")
    t3 = roots(p).t3.real
    t = np.asarray(t, dtype=float)
    return t ** 2 / 3.0 + t3 * t / 3.0 + xi / t3


def ground_state(p: SymbolParams, mesh: SpectralMesh1D | None = None) -> GroundState:
    """Ground eigenpair of the symbol on the given mesh, phase-fixed positive."""
    if mesh is None:
        mesh = default_mesh()
    mats = assemble.assemble_1d(mesh, lambda t: potential(p, t))
    res = solve_dense_sym(mats, 2)
    rho1, rho2 = res.eigenvalues[0], res.eigenvalues[1]
    gap = rho2 - rho1
    if gap <= SIMPLICITY_GAP:
        raise NumericError(f"ground state not simple: gap {gap:.3e} at {p}")
    v_end = max(potential(p, mesh.interval_lo), potential(p, mesh.interval_hi))
    if v_end < 10.0 * rho1:
        warnings.warn(
            f"mesh ({mesh.interval_lo}, {mesh.interval_hi}) may truncate the classically "
            f"allowed region at {p}: endpoint potential {v_end:.3g} < 10*rho1",
            stacklevel=2,
        )
    u = res.eigenvectors[:, 0].copy()
    if u[np.argmax(np.abs(u))] < 0:
        u = -u
    return GroundState(rho1=float(rho1), u=u, mesh=mesh, gap=float(gap), result=res)


def fh_gradient(g: GroundState, p: SymbolParams) -> tuple[float, float]:
    """Parameter derivatives of rho1 from the squared ground state.

    d_alpha = 4 alpha int generator(t) t u^2,  d_xi = 2 int generator(t) u^2,
    both by the mesh quadrature.
    """
    xq, wq = g.mesh.quadrature()
    u2 = g.mesh.values_at_quad(g.u) ** 2
    gen = generator(p, xq)
    d_alpha = 4.0 * p.alpha * np.sum(wq * gen * xq * u2)
    d_xi = 2.0 * np.sum(wq * gen * u2)
    return float(d_alpha), float(d_xi)


def region_classify(p: SymbolParams, R: float) -> Region:
    """Classify a first-quadrant parameter point for the divergence estimates."""
    a, xi = p.alpha, p.xi
    if a < 0 or xi < 0:
        raise DomainError("region_classify requires alpha >= 0 and xi >= 0")
    if a + xi <= R:
        return Region.INSIDE
    if xi > 2.0 * a ** 3 / 3.0:
        return Region.CIRC if a <= 1.0 else Region.SHARP
    return Region.FLAT
