"""1D spectral-element meshes: GLL nodal layout and Gauss-Legendre quadrature.

Elements are uniform subdivisions of an interval. Each element carries a
Lagrange basis at Gauss-Lobatto-Legendre (GLL) points of the given degree;
element-boundary nodes are shared, so a mesh with E elements of degree Q has
E*Q + 1 global nodes. Quadrature is per-element Gauss-Legendre with enough
points to integrate products of two basis polynomials times a degree-6
potential exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import legendre as npleg

from .errors import ParameterError

MAX_DEGREE = 20


def gll_nodes(degree: int) -> np.ndarray:
    """GLL points on [-1, 1] for a degree-Q Lagrange basis (Q+1 points)."""
    if degree == 1:
        return np.array([-1.0, 1.0])
    # interior points are the roots of P_Q'
    coeffs = np.zeros(degree + 1)
    coeffs[degree] = 1.0
    interior = npleg.legroots(npleg.legder(coeffs))
    return np.concatenate(([-1.0], np.sort(interior.real), [1.0]))


def barycentric_weights(nodes: np.ndarray) -> np.ndarray:
    w = np.ones_like(nodes)
    for i in range(nodes.size):
        w[i] = 1.0 / np.prod(nodes[i] - np.delete(nodes, i))
    return w


def lagrange_matrices(nodes: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Values and first derivatives of the Lagrange basis at points x.

    Returns (E, D) with E[q, j] = phi_j(x[q]) and D[q, j] = phi_j'(x[q]).
    Uses direct product formulas; fine for degree <= 20.
    """
    n = nodes.size
    x = np.asarray(x, dtype=float)
    E = np.ones((x.size, n))
    D = np.zeros((x.size, n))
    for j in range(n):
        others = np.delete(nodes, j)
        denom = np.prod(nodes[j] - others)
        diffs = x[:, None] - others[None, :]  # (nx, n-1)
        E[:, j] = np.prod(diffs, axis=1) / denom
        # derivative of the product: sum over dropped factors
        for k in range(n - 1):
            D[:, j] += np.prod(np.delete(diffs, k, axis=1), axis=1)
        D[:, j] /= denom
    return E, D


@dataclass(frozen=True)
class SpectralMesh1D:
    interval_lo: float
    interval_hi: float
    n_elements: int
    degree: int
    nodes: np.ndarray = field(repr=False)        # global, strictly increasing
    ref_nodes: np.ndarray = field(repr=False)    # GLL points on [-1, 1]
    quad_points: np.ndarray = field(repr=False)  # reference Gauss points
    quad_weights: np.ndarray = field(repr=False)
    basis_at_quad: np.ndarray = field(repr=False)
    dbasis_at_quad: np.ndarray = field(repr=False)

    @property
    def n_nodes(self) -> int:
        return self.n_elements * self.degree + 1

    @property
    def element_width(self) -> float:
        return (self.interval_hi - self.interval_lo) / self.n_elements

    def element_dofs(self, e: int) -> slice:
        return slice(e * self.degree, e * self.degree + self.degree + 1)

    def element_quad_coords(self, e: int) -> np.ndarray:
        lo = self.interval_lo + e * self.element_width
        return lo + 0.5 * self.element_width * (self.quad_points + 1.0)

    def quadrature(self) -> tuple[np.ndarray, np.ndarray]:
        """All physical quadrature points and weights, concatenated by element."""
        h2 = 0.5 * self.element_width
        xs = np.concatenate([self.element_quad_coords(e) for e in range(self.n_elements)])
        ws = np.tile(self.quad_weights * h2, self.n_elements)
        return xs, ws

    def values_at_quad(self, coeffs: np.ndarray) -> np.ndarray:
        """Evaluate a nodal coefficient vector at all quadrature points."""
        out = np.empty(self.n_elements * self.quad_points.size, dtype=np.asarray(coeffs).dtype)
        nq = self.quad_points.size
        for e in range(self.n_elements):
            out[e * nq:(e + 1) * nq] = self.basis_at_quad @ coeffs[self.element_dofs(e)]
        return out

    def evaluation_matrix(self, x: np.ndarray) -> np.ndarray:
        """Dense matrix V with (V @ coeffs)[i] = value at x[i].

        Points must lie inside the interval; each point is evaluated in the
        element containing it (right-closed at the last element).
        """
        x = np.asarray(x, dtype=float)
        if x.size and (x.min() < self.interval_lo - 1e-12 or x.max() > self.interval_hi + 1e-12):
            raise ParameterError("evaluation points outside the mesh interval")
        V = np.zeros((x.size, self.n_nodes))
        h = self.element_width
        elem = np.clip(((x - self.interval_lo) / h).astype(int), 0, self.n_elements - 1)
        for e in np.unique(elem):
            sel = elem == e
            lo = self.interval_lo + e * h
            r = 2.0 * (x[sel] - lo) / h - 1.0
            E, _ = lagrange_matrices(self.ref_nodes, r)
            V[np.ix_(sel, range(e * self.degree, e * self.degree + self.degree + 1))] = E
        return V


def build_mesh(
    lo: float, hi: float, n_elements: int, degree: int, n_quad: int | None = None
) -> SpectralMesh1D:
    """Uniform spectral-element mesh on (lo, hi).

    The default quadrature integrates products of two basis polynomials
    against a degree-6 coefficient exactly; `n_quad` overrides the number of
    Gauss points per element (used to mirror reference computations that
    integrate the potential at the accuracy of degree-Q data).
    """
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise ParameterError(f"invalid interval ({lo}, {hi})")
    if n_elements < 1:
        raise ParameterError(f"n_elements must be >= 1, got {n_elements}")
    if not (1 <= degree <= MAX_DEGREE):
        raise ParameterError(f"degree must be in [1, {MAX_DEGREE}], got {degree}")

    ref = gll_nodes(degree)
    h = (hi - lo) / n_elements
    nodes = np.empty(n_elements * degree + 1)
    for e in range(n_elements):
        xl = lo + e * h
        nodes[e * degree:e * degree + degree + 1] = xl + 0.5 * h * (ref + 1.0)
    nodes[0], nodes[-1] = lo, hi  # exact endpoints

    if n_quad is None:
        # exact for basis*basis*degree-6 weight: 2Q+6 <= 2*nq - 1
        n_quad = (2 * degree + 7 + 1) // 2
    elif n_quad < degree + 1:
        raise ParameterError(f"n_quad must be at least degree+1, got {n_quad}")
    qp, qw = npleg.leggauss(n_quad)
    E, D = lagrange_matrices(ref, qp)
    return SpectralMesh1D(
        interval_lo=float(lo),
        interval_hi=float(hi),
        n_elements=n_elements,
        degree=degree,
        nodes=nodes,
        ref_nodes=ref,
        quad_points=qp,
        quad_weights=qw,
        basis_at_quad=E,
        dbasis_at_quad=D,
    )
