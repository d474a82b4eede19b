import numpy as np
import pytest

from crossband.assemble import (
    assemble_1d,
    moment_matrices,
    read_matrices,
    write_matrices,
)
from crossband.errors import AssemblyError
from crossband.mesh import build_mesh


def test_hat_functions_exact_matrices():
    mesh = build_mesh(0, 1, 1, 1)
    mats = assemble_1d(mesh, lambda t: 0.0 * t)
    assert np.allclose(mats.stiffness, [[1, -1], [-1, 1]], atol=1e-14)
    assert np.allclose(mats.mass, [[1 / 3, 1 / 6], [1 / 6, 1 / 3]], atol=1e-14)
    assert np.allclose(mats.potential, 0.0)


def test_matrices_symmetric_and_mass_spd():
    mesh = build_mesh(-5, 5, 10, 10)
    mats = assemble_1d(mesh, lambda t: t ** 6 / 9.0)
    for A in (mats.stiffness, mats.potential, mats.mass):
        assert np.allclose(A, A.T, atol=1e-12 * max(1.0, np.abs(A).max()))
    np.linalg.cholesky(mats.mass)


def test_harmonic_oscillator_spectrum():
    mesh = build_mesh(-10, 10, 20, 10)
    mats = assemble_1d(mesh, lambda t: t ** 2)
    from crossband.eigen import solve_dense_sym

    res = solve_dense_sym(mats, 3)
    assert np.allclose(res.eigenvalues, [1, 3, 5], atol=1e-8)


def test_non_finite_potential_reports_quadrature_point():
    mesh = build_mesh(0, 2, 2, 3)
    with pytest.raises(AssemblyError, match="quadrature point"):
        assemble_1d(mesh, lambda t: np.where(t > 1.0, np.inf, t))


def test_dirichlet_flag_removes_boundary_dofs():
    mesh = build_mesh(-1, 1, 4, 3)
    full = assemble_1d(mesh, lambda t: t ** 2)
    constrained = assemble_1d(mesh, lambda t: t ** 2, dirichlet=True)
    assert constrained.dim == full.dim - 2
    assert np.allclose(constrained.mass, full.mass[1:-1, 1:-1])


def test_moment_matrices_rebuild_polynomial_potential():
    mesh = build_mesh(-3, 3, 5, 6)
    m = moment_matrices(mesh, (0, 2, 4))
    direct = assemble_1d(mesh, lambda t: 2.0 - t ** 2 + 0.5 * t ** 4).potential
    combo = 2.0 * m[0] - m[2] + 0.5 * m[4]
    assert np.allclose(direct, combo, atol=1e-12 * np.abs(direct).max())


def test_binary_dump_roundtrip(tmp_path):
    mesh = build_mesh(-2, 2, 3, 4)
    mats = assemble_1d(mesh, lambda t: t ** 2)
    path = tmp_path / "mats.mcx1"
    write_matrices(mats, str(path))
    assert path.read_bytes()[:4] == b"MCX1"
    back = read_matrices(str(path))
    assert back.dim == mats.dim
    assert np.array_equal(back.stiffness, mats.stiffness)
    assert np.array_equal(back.potential, mats.potential)
    assert np.array_equal(back.mass, mats.mass)
