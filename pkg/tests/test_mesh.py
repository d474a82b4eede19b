import numpy as np
import pytest

from crossband.errors import ParameterError
from crossband.mesh import build_mesh, gll_nodes


def test_node_count_reference_config():
    mesh = build_mesh(-5, 5, 10, 10)
    assert mesh.n_nodes == 101
    assert mesh.nodes.size == 101


def test_node_count_linear():
    mesh = build_mesh(0, 1, 1, 1)
    assert np.allclose(mesh.nodes, [0.0, 1.0])


def test_node_count_ladder_config():
    assert build_mesh(-8, 8, 6, 10).n_nodes == 61


def test_nodes_strictly_increasing_with_exact_endpoints():
    mesh = build_mesh(-3.5, 7.25, 7, 9)
    assert np.all(np.diff(mesh.nodes) > 0)
    assert mesh.nodes[0] == -3.5
    assert mesh.nodes[-1] == 7.25


def test_quadrature_weights_positive_and_sum_to_length():
    mesh = build_mesh(-2, 4, 5, 8)
    assert np.all(mesh.quad_weights > 0)
    _, ws = mesh.quadrature()
    assert np.isclose(ws.sum(), 6.0, rtol=1e-14)
    # per element
    nq = mesh.quad_points.size
    assert np.isclose(ws[:nq].sum(), mesh.element_width, rtol=1e-14)


def test_quadrature_exactness_for_sextic_times_basis_pair():
    # degree-Q basis squared times t^6 must integrate exactly
    mesh = build_mesh(0, 1, 1, 4)
    xq, wq = mesh.quadrature()
    total = np.sum(wq * xq ** (2 * 4 + 6))
    assert np.isclose(total, 1.0 / 15.0, rtol=1e-14)


def test_gll_nodes_symmetric():
    for q in (2, 5, 10):
        x = gll_nodes(q)
        assert x.size == q + 1
        assert np.allclose(x, -x[::-1], atol=1e-14)


@pytest.mark.parametrize(
    "args",
    [(5, -5, 10, 10), (0, 1, 0, 3), (0, 1, 2, 0), (0, 1, 2, 21)],
)
def test_invalid_parameters_rejected(args):
    with pytest.raises(ParameterError):
        build_mesh(*args)


def test_values_at_quad_reproduces_polynomials():
    mesh = build_mesh(-1, 2, 3, 6)
    coeffs = mesh.nodes ** 5 - 2 * mesh.nodes  # degree 5 <= 6: exact interpolation
    xq, _ = mesh.quadrature()
    assert np.allclose(mesh.values_at_quad(coeffs), xq ** 5 - 2 * xq, atol=1e-11)


def test_evaluation_matrix_interpolates():
    mesh = build_mesh(-1, 1, 4, 5)
    coeffs = np.sin(mesh.nodes)
    x = np.linspace(-1, 1, 37)
    vals = mesh.evaluation_matrix(x) @ coeffs
    assert np.allclose(vals, np.sin(x), atol=1e-7)


def test_evaluation_matrix_rejects_outside_points():
    mesh = build_mesh(0, 1, 2, 3)
    with pytest.raises(ParameterError):
        mesh.evaluation_matrix(np.array([1.5]))
