"""Galerkin assembly of 1D operators in weak form.

All matrices are dense and real symmetric; the weak form imposes no
essential constraints (natural boundary conditions), with an optional
Dirichlet flag used only for cross-checks against finite differences.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AssemblyError, ParameterError
from .mesh import SpectralMesh1D

_MAGIC = b"MCX1"


@dataclass(frozen=True)
class OperatorMatrices:
    dim: int
    stiffness: np.ndarray
    potential: np.ndarray
    mass: np.ndarray

    @property
    def hamiltonian(self) -> np.ndarray:
        return self.stiffness + self.potential


def weighted_mass(mesh: SpectralMesh1D, values: np.ndarray) -> np.ndarray:
    """Assemble the matrix of u, v -> sum_q w_q f(x_q) u(x_q) v(x_q).

    `values` holds f at all quadrature points in element order.
    """
    n = mesh.n_nodes
    nq = mesh.quad_points.size
    h2 = 0.5 * mesh.element_width
    M = np.zeros((n, n))
    E = mesh.basis_at_quad
    for e in range(mesh.n_elements):
        w = mesh.quad_weights * values[e * nq:(e + 1) * nq] * h2
        dofs = mesh.element_dofs(e)
        M[dofs, dofs] += E.T @ (w[:, None] * E)
    return M


def weighted_convection(mesh: SpectralMesh1D, values: np.ndarray) -> np.ndarray:
    """Assemble C with C[i, j] = int f phi_j' phi_i (jacobians cancel)."""
    n = mesh.n_nodes
    nq = mesh.quad_points.size
    C = np.zeros((n, n))
    E, D = mesh.basis_at_quad, mesh.dbasis_at_quad
    for e in range(mesh.n_elements):
        w = mesh.quad_weights * values[e * nq:(e + 1) * nq]
        dofs = mesh.element_dofs(e)
        C[dofs, dofs] += E.T @ (w[:, None] * D)
    return C


def stiffness_mass(mesh: SpectralMesh1D) -> tuple[np.ndarray, np.ndarray]:
    """Global stiffness (int u'v') and mass (int uv) matrices."""
    n = mesh.n_nodes
    K = np.zeros((n, n))
    M = np.zeros((n, n))
    h = mesh.element_width
    E, D = mesh.basis_at_quad, mesh.dbasis_at_quad
    Ke = (2.0 / h) * D.T @ (mesh.quad_weights[:, None] * D)
    Me = (h / 2.0) * E.T @ (mesh.quad_weights[:, None] * E)
    for e in range(mesh.n_elements):
        dofs = mesh.element_dofs(e)
        K[dofs, dofs] += Ke
        M[dofs, dofs] += Me
    return K, M


def assemble_1d(
    mesh: SpectralMesh1D,
    potential: Callable[[np.ndarray], np.ndarray] | Callable[[float], float],
    dirichlet: bool = False,
) -> OperatorMatrices:
    """Weak form of D_t^2 + V(t) on the mesh.

    With `dirichlet=True`, the first and last degrees of freedom are removed
    (essential boundary conditions), used only when comparing against a
    Dirichlet finite-difference discretization.
    """
    xq, _ = mesh.quadrature()
    vals = np.asarray(potential(xq), dtype=float)
    if vals.shape != xq.shape:
        vals = np.array([potential(x) for x in xq], dtype=float)
    bad = ~np.isfinite(vals)
    if bad.any():
        i = int(np.argmax(bad))
        raise AssemblyError(f"non-finite potential value at quadrature point t={xq[i]!r}")

    K, M = stiffness_mass(mesh)
    P = weighted_mass(mesh, vals)
    if dirichlet:
        K, P, M = (A[1:-1, 1:-1] for A in (K, P, M))
    return OperatorMatrices(dim=K.shape[0], stiffness=K, potential=P, mass=M)


def moment_matrices(mesh: SpectralMesh1D, powers: tuple[int, ...]) -> dict[int, np.ndarray]:
    """Matrices of int t^k u v for each requested power k.

    Lets a parameter sweep rebuild polynomial potentials as matrix
    combinations instead of re-assembling per parameter point.
    """
    xq, _ = mesh.quadrature()
    return {k: weighted_mass(mesh, xq ** k) for k in powers}


def write_matrices(mats: OperatorMatrices, path: str) -> None:
    """Debug dump: magic 'MCX1', int64 dim, then K, P, M column-major float64."""
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<q", mats.dim))
        for A in (mats.stiffness, mats.potential, mats.mass):
            fh.write(np.asfortranarray(A, dtype="<f8").tobytes(order="F"))


def read_matrices(path: str) -> OperatorMatrices:
    with open(path, "rb") as fh:
        if fh.read(4) != _MAGIC:
            raise ParameterError(f"{path}: bad magic, not an MCX1 dump")
        (dim,) = struct.unpack("<q", fh.read(8))
        mats = []
        for _ in range(3):
            buf = fh.read(8 * dim * dim)
            mats.append(np.frombuffer(buf, dtype="<f8").reshape((dim, dim), order="F"))
    return OperatorMatrices(dim=dim, stiffness=mats[0], potential=mats[1], mass=mats[2])
