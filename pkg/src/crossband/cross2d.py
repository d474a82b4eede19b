"""2D tensor-product discretization of the crossing-field operator.

The operator has the shape (c D_s + W(s, t))^2 + D_t^2 with W a sum of
separable terms f(s) g(t). Every block of the weak form is then a Kronecker
product of global 1D matrices: stiffness and mass per direction, weighted
mass matrices for the potential, and first-derivative couplings for the
imaginary Hermitian part.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from . import assemble
from .errors import NumericError, ParameterError
from .mesh import SpectralMesh1D, build_mesh

# one separable term of W: (f(s), g(t)); scalars are allowed for constants
WTerm = tuple[Callable | float, Callable | float]

HERMITICITY_TOL = 1e-12
RESIDUAL_TOL = 1e-8

DEFAULT_DEGREE = 8


def epsilon_of_level(l: int) -> float:
    """Half-angle parameter ladder 2^(-1 - l/2)."""
    return 2.0 ** (-1.0 - 0.5 * l)


@dataclass(frozen=True)
class CrossOperatorSpec:
    epsilon: float
    variables: str                  # "sigma_tau" (physical) or "st" (rescaled)
    mesh_s: SpectralMesh1D
    mesh_t: SpectralMesh1D
    c: float = field(init=False)
    wterms: tuple[WTerm, ...] = field(init=False)

    def __post_init__(self):
        eps = self.epsilon
        if eps <= 0:
            raise ParameterError(f"epsilon must be positive, got {eps}")
        if self.variables == "sigma_tau":
            c = 1.0
            wterms = ((1.0, lambda t: -t ** 3 / 3.0), (lambda s: eps ** 2 * s ** 2, lambda t: t))
        elif self.variables == "st":
            c = eps
            wterms = ((lambda s: s ** 2, lambda t: t), (1.0, lambda t: -t ** 3 / 3.0))
        else:
            raise ParameterError(f"unknown variable set {self.variables!r}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "wterms", wterms)

    @property
    def dim(self) -> int:
        return self.mesh_s.n_nodes * self.mesh_t.n_nodes

    def field_strength(self, s, t):
        """Curl of the gauge (-t^3/3 + eps^2 s^2 t, 0): eps^2 s^2 - t^2."""
        if self.variables != "sigma_tau":
            raise ParameterError("field_strength is defined for the physical variables")
        return self.epsilon ** 2 * np.asarray(s) ** 2 - np.asarray(t) ** 2


def ladder_spec(l: int, degree: int = DEFAULT_DEGREE, variables: str = "sigma_tau",
               tau_extent: float | None = None) -> CrossOperatorSpec:
    """Ladder configuration: 48 x 6 elements, domain shrinking with the level.

    Levels 0..5 use [-4/eps, 4/eps] x [-8, 8]; levels >= 6 halve both extents.
    """
    eps = epsilon_of_level(l)
    a = 4.0 / eps
    b = 8.0
    if l >= 6:
        a, b = a / 2.0, b / 2.0
    if tau_extent is not None:
        b = tau_extent
    if variables == "st":
        a = a * eps
    mesh_s = build_mesh(-a, a, 48, degree)
    mesh_t = build_mesh(-b, b, 6, degree)
    return CrossOperatorSpec(epsilon=eps, variables=variables, mesh_s=mesh_s, mesh_t=mesh_t)


def spec_for_epsilon(
    epsilon: float, degree: int = DEFAULT_DEGREE, variables: str = "sigma_tau"
) -> CrossOperatorSpec:
    """Ladder-style configuration for an arbitrary half-angle parameter."""
    a, b = 4.0 / epsilon, 8.0
    if epsilon < epsilon_of_level(6):
        a, b = a / 2.0, b / 2.0
    if variables == "st":
        a = a * epsilon
    mesh_s = build_mesh(-a, a, 48, degree)
    mesh_t = build_mesh(-b, b, 6, degree)
    return CrossOperatorSpec(epsilon=epsilon, variables=variables, mesh_s=mesh_s, mesh_t=mesh_t)


@dataclass(frozen=True)
class HermitianSystem:
    dim: int
    H: sp.csr_matrix       # complex Hermitian
    M: sp.csr_matrix       # real SPD mass


@dataclass(frozen=True)
class EigenResult2D:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray     # columns, complex, mass-orthonormal
    residual_norms: np.ndarray


def _fvals(f, x: np.ndarray) -> np.ndarray:
    if callable(f):
        return np.asarray(f(x), dtype=float)
    return np.full(x.shape, float(f))


def assemble_tensor_operator(
    mesh_s: SpectralMesh1D,
    mesh_t: SpectralMesh1D,
    c: float,
    wterms: Sequence[WTerm],
) -> HermitianSystem:
    """Weak form of (c D_s + sum f_k(s) g_k(t))^2 + D_t^2."""
    Ks, Ms = assemble.stiffness_mass(mesh_s)
    Kt, Mt = assemble.stiffness_mass(mesh_t)
    xs, _ = mesh_s.quadrature()
    xt, _ = mesh_t.quadrature()
    fs = [_fvals(f, xs) for f, _ in wterms]
    gt = [_fvals(g, xt) for _, g in wterms]

    def K(A, B):
        return sp.kron(sp.csr_matrix(A), sp.csr_matrix(B), format="csr")

    H = (c * c) * K(Ks, Mt) + K(Ms, Kt)
    # potential: W^2 expanded over pairs of separable terms
    for k in range(len(wterms)):
        for l in range(k, len(wterms)):
            factor = 1.0 if l == k else 2.0
            H = H + factor * K(
                assemble.weighted_mass(mesh_s, fs[k] * fs[l]),
                assemble.weighted_mass(mesh_t, gt[k] * gt[l]),
            )
    # cross terms c (D_s . W + W . D_s): imaginary antisymmetric coupling
    Hc = sp.csr_matrix((mesh_s.n_nodes * mesh_t.n_nodes,) * 2)
    for k in range(len(wterms)):
        C = assemble.weighted_convection(mesh_s, fs[k])
        Hc = Hc + K(C.T - C, assemble.weighted_mass(mesh_t, gt[k]))
    H = H.astype(complex) + (1j * c) * Hc

    err = abs(H - H.getH()).max()
    scale = max(abs(H).max(), 1.0)
    if err > HERMITICITY_TOL * scale:
        raise NumericError(f"assembled operator not Hermitian: deviation {err:.3e}")
    return HermitianSystem(dim=H.shape[0], H=H.tocsr(), M=K(Ms, Mt))


def assemble_cross(spec: CrossOperatorSpec) -> HermitianSystem:
    return assemble_tensor_operator(spec.mesh_s, spec.mesh_t, spec.c, spec.wterms)


def solve_sparse(sys: HermitianSystem, n_eigs: int, shift: float = 0.0) -> EigenResult2D:
    """Smallest eigenpairs by shift-invert Lanczos with M inner product."""
    if n_eigs < 1 or n_eigs >= sys.dim:
        raise ParameterError(f"n_eigs={n_eigs} out of range for dim={sys.dim}")
    try:
        vals, vecs = spla.eigsh(sys.H, k=n_eigs, M=sys.M, sigma=shift, which="LM")
    except spla.ArpackNoConvergence as exc:
        raise NumericError(
            f"Lanczos did not converge: {len(exc.eigenvalues)} Ritz values of {n_eigs}"
        ) from exc
    except RuntimeError as exc:
        raise NumericError(
            f"shift-invert factorization or Lanczos failed at shift={shift}: {exc}; "
            "try a smaller shift"
        ) from exc
    order = np.argsort(vals)
    vals, vecs = vals[order].real, vecs[:, order]

    Mfact = spla.splu(sys.M.tocsc().astype(complex))
    res = np.empty(n_eigs)
    for j in range(n_eigs):
        v = vecs[:, j]
        v /= np.sqrt((v.conj() @ (sys.M @ v)).real)
        r = sys.H @ v - vals[j] * (sys.M @ v)
        res[j] = np.sqrt((r.conj() @ Mfact.solve(r)).real)
        vecs[:, j] = v
    if res.max() > RESIDUAL_TOL:
        raise NumericError(f"eigenpair residual {res.max():.3e} above {RESIDUAL_TOL}")
    return EigenResult2D(eigenvalues=vals, eigenvectors=vecs, residual_norms=res)


def epsilon_ladder(
    l_max: int, n_eigs: int = 1, degree: int = DEFAULT_DEGREE
) -> list[tuple[int, float, list[float] | None, str | None]]:
    """kappa_1..kappa_n per ladder level; failures recorded, not raised.

    Returns rows (l, epsilon, eigenvalues or None, error message or None).
    """
    if l_max > 12:
        raise ParameterError("ladder levels beyond 12 are outside the studied range")
    rows = []
    for l in range(l_max + 1):
        eps = epsilon_of_level(l)
        try:
            res = solve_sparse(assemble_cross(ladder_spec(l, degree=degree)), n_eigs)
            rows.append((l, eps, [float(v) for v in res.eigenvalues], None))
        except Exception as exc:  # keep the ladder going
            rows.append((l, eps, None, f"{type(exc).__name__}: {exc}"))
    return rows


def _quad_field(res: EigenResult2D, spec: CrossOperatorSpec, n: int):
    """|psi_n|^2 with weights and coordinates at all 2D quadrature points."""
    ms, mt = spec.mesh_s, spec.mesh_t
    U = res.eigenvectors[:, n].reshape(ms.n_nodes, mt.n_nodes)
    xs, ws = ms.quadrature()
    xt, wt = mt.quadrature()
    nqs, nqt = ms.quad_points.size, mt.quad_points.size
    dens = np.empty((xs.size, xt.size))
    for es in range(ms.n_elements):
        rows = ms.basis_at_quad @ U[ms.element_dofs(es), :]
        for et in range(mt.n_elements):
            block = rows[:, mt.element_dofs(et)] @ mt.basis_at_quad.T
            dens[es * nqs:(es + 1) * nqs, et * nqt:(et + 1) * nqt] = np.abs(block) ** 2
    return xs, xt, ws[:, None] * wt[None, :], dens


def decay_profile(
    res: EigenResult2D, spec: CrossOperatorSpec, radii: Sequence[float], n: int = 0
) -> list[tuple[float, float]]:
    """Relative mass of |psi_n|^2 outside each radius (ascending radii)."""
    radii = list(radii)
    if any(b > a for a, b in zip(radii[1:], radii)):
        raise ParameterError("radii must be ascending")
    xs, xt, w2, dens = _quad_field(res, spec, n)
    r2 = xs[:, None] ** 2 + xt[None, :] ** 2
    total = float(np.sum(w2 * dens))
    return [(float(R), float(np.sum(w2[r2 > R * R] * dens[r2 > R * R]) / total)) for R in radii]


def default_zoom_window(epsilon: float, alpha0: float) -> tuple[float, float, float, float]:
    """Zoom box around the localization center (alpha0/eps, 0)."""
    half = 2.0 / np.sqrt(epsilon)
    return (alpha0 / epsilon - half, alpha0 / epsilon + half, -3.0, 3.0)


def modulus_field(
    res: EigenResult2D,
    spec: CrossOperatorSpec,
    n: int,
    window: tuple[float, float, float, float],
    resolution: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """|psi_n| on a uniform raster over window = (s_lo, s_hi, t_lo, t_hi).

    Evaluation is element-local Lagrange interpolation; returns the raster
    axes and the field with shape (resolution, resolution) indexed [s, t].
    """
    s_lo, s_hi, t_lo, t_hi = window
    ms, mt = spec.mesh_s, spec.mesh_t
    if (s_lo < ms.interval_lo or s_hi > ms.interval_hi
            or t_lo < mt.interval_lo or t_hi > mt.interval_hi):
        raise ParameterError("raster window outside the computation domain")
    sg = np.linspace(s_lo, s_hi, resolution)
    tg = np.linspace(t_lo, t_hi, resolution)
    U = res.eigenvectors[:, n].reshape(ms.n_nodes, mt.n_nodes)
    Vs = ms.evaluation_matrix(sg)
    Vt = mt.evaluation_matrix(tg)
    return sg, tg, np.abs(Vs @ U @ Vt.T)


def write_ladder_csv(rows, path: str) -> None:
    """CSV schema: l,epsilon,kappa1,... with 17 significant digits."""
    n = max((len(r[2]) for r in rows if r[2] is not None), default=1)
    with open(path, "w", newline="\n") as fh:
        fh.write("l,epsilon," + ",".join(f"kappa{i + 1}" for i in range(n)) + "\n")
        for l, eps, kappas, err in rows:
            vals = ["" if kappas is None else f"{k:.17g}" for k in (kappas or [])]
            vals += [""] * (n - len(vals))
            fh.write(f"{l},{eps:.17g}," + ",".join(vals) + "\n")


def write_raster_csv(sg, tg, field, path: str) -> None:
    """CSV schema: sigma,tau,abs_psi in row-major raster order."""
    with open(path, "w", newline="\n") as fh:
        fh.write("sigma,tau,abs_psi\n")
        for i, s in enumerate(sg):
            for j, t in enumerate(tg):
                fh.write(f"{s:.17g},{t:.17g},{field[i, j]:.17g}\n")
