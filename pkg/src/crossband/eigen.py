"""Dense generalized symmetric eigensolver for the 1D weak forms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .assemble import OperatorMatrices
from .errors import NumericError, ParameterError


@dataclass(frozen=True)
class EigenResult1D:
    eigenvalues: np.ndarray        # ascending
    eigenvectors: np.ndarray       # columns, mass-orthonormal
    residual_norms: np.ndarray


def solve_dense_sym(mats: OperatorMatrices, n_eigs: int) -> EigenResult1D:
    """Smallest n_eigs eigenpairs of (K + P) v = lambda M v.

    Reduction is by Cholesky of the mass matrix (LAPACK itype=1 path), so a
    near-singular K + P is harmless. Eigenvectors are returned
    mass-orthonormal with residuals measured in the M^{-1} norm.
    """
    if n_eigs < 1 or n_eigs > mats.dim:
        raise ParameterError(f"n_eigs={n_eigs} out of range for dim={mats.dim}")
    A = mats.hamiltonian
    try:
        cho = sla.cho_factor(mats.mass, lower=True)
    except sla.LinAlgError as exc:
        raise NumericError("mass not SPD: Cholesky factorization failed") from exc
    try:
        vals, vecs = sla.eigh(A, mats.mass)
    except sla.LinAlgError as exc:
        raise NumericError(f"dense symmetric eigensolver failed: {exc}") from exc

    vals = vals[:n_eigs]
    vecs = vecs[:, :n_eigs]
    # eigh returns B-orthonormal vectors; tighten normalization anyway
    for j in range(n_eigs):
        vecs[:, j] /= np.sqrt(vecs[:, j] @ mats.mass @ vecs[:, j])

    res = np.empty(n_eigs)
    for j in range(n_eigs):
        r = A @ vecs[:, j] - vals[j] * (mats.mass @ vecs[:, j])
        res[j] = np.sqrt(r @ sla.cho_solve(cho, r))
    return EigenResult1D(eigenvalues=vals, eigenvectors=vecs, residual_norms=res)


def smallest_eigenvalue(A: np.ndarray, M: np.ndarray) -> float:
    """Fast path for parameter sweeps: lambda_1 of (A, M) only, no vectors."""
    vals = sla.eigh(A, M, subset_by_index=(0, 0), eigvals_only=True, driver="gvx")
    return float(vals[0])
