import numpy as np
import pytest
import numpy.testing as npt

from rshelix.curves import Jet


def exp_jet(x, length=6):
    # Derivatives of exp at x are all exp(x):
    return Jet.from_derivatives(np.full(length, np.exp(x)))


def test_Jet():
    jet = Jet.from_derivatives([1.0, 2.0, 6.0, 24.0])
    npt.assert_almost_equal(jet.coeffs, [1, 2, 3, 4])
    npt.assert_equal(len(jet), 4)
    npt.assert_almost_equal(jet.derivative(3), 24)
    npt.assert_almost_equal(jet.diff().coeffs, [2, 6, 12])
    npt.assert_equal(len(jet.truncate(2)), 2)
    with pytest.raises(ValueError):
        jet.derivative(4)
    with pytest.raises(ValueError):
        Jet([])
    with pytest.raises(ValueError):
        Jet([1.0]).diff()


def test_Jet_arithmetic():
    a = exp_jet(0.3)
    b = exp_jet(-0.3)
    # exp(x) exp(-x) = 1 has vanishing derivatives; here both are expanded
    # in the same variable, so exp(0.3 + e) exp(-0.3 + e) = exp(2 e):
    prod = a * b
    npt.assert_allclose([prod.derivative(k) for k in range(6)],
                        2.0 ** np.arange(6), rtol=1e-12)
    npt.assert_allclose((a / a).coeffs, [1, 0, 0, 0, 0, 0], atol=1e-14)
    npt.assert_allclose((a + b - b).coeffs, a.coeffs)
    npt.assert_allclose((2 * a).coeffs, 2 * a.coeffs)
    npt.assert_allclose((a / 2).coeffs, a.coeffs / 2)
    # sqrt(exp(2 e)) = exp(e):
    root = Jet.from_derivatives(2.0 ** np.arange(6)).sqrt()
    npt.assert_allclose([root.derivative(k) for k in range(6)], 1,
                        rtol=1e-12)


def test_Jet_vectors():
    # Unit circle (cos s, sin s, 0) at s = 0.4:
    s = 0.4
    derivs = [[np.cos(s + k * np.pi / 2), np.sin(s + k * np.pi / 2), 0]
              for k in range(5)]
    circle = Jet.from_derivatives(derivs)
    npt.assert_equal(circle.coeffs.shape, (5, 3))
    norm_sq = circle.dot(circle)
    npt.assert_allclose(norm_sq.coeffs, [1, 0, 0, 0, 0], atol=1e-14)
    # Scalar jets broadcast over the vector axis:
    scaled = Jet.from_derivatives([2.0, 0, 0, 0, 0]) * circle
    npt.assert_allclose(scaled.coeffs, 2 * circle.coeffs)
    unit = circle / norm_sq.sqrt()
    npt.assert_allclose(unit.coeffs, circle.coeffs, atol=1e-14)
