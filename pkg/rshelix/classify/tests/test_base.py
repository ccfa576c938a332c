import numpy as np
import pytest
import numpy.testing as npt

from rshelix.classify import (RectifyingFit, SlantVerdict,
                              RectifyingDecomposition, OdeCheck,
                              rectifying_fit, slant_verdict,
                              rectifying_decomposition, ode_residual,
                              v_identity_residual, v_prime_residual,
                              v_second_residual, kappa_identity_residual)
from rshelix.curves import (sample_curve, frenet_at, integrate_frenet,
                            CircularHelix, StraightLine,
                            FiniteDifferenceCurve)
from rshelix.family import FamilyParams, make_rs_helix, closed_form_kappa_tau
from rshelix.utils import (CurvatureVanishes, InsufficientSamples,
                           InvalidParams, MalformedInput, StencilOutOfDomain,
                           Tolerances, norm)

EXAMPLE1 = FamilyParams.from_cos_theta(1, 0, 1 / 3)
EXAMPLE2 = FamilyParams.from_cos_theta(0.5, -0.2, 0.1)


def test_RectifyingFit():
    fit = RectifyingFit(1, 0, 1e-10, 1, 10, 1e-8, 1e-8)
    npt.assert_equal(fit.is_rectifying, True)
    # Zero slope is not rectifying:
    npt.assert_equal(RectifyingFit(1e-9, 0, 0, 0, 10, 1e-8,
                                   1e-8).is_rectifying, False)
    # Neither is a poor fit:
    npt.assert_equal(RectifyingFit(1, 0, 1e-3, 0.9, 10, 1e-8,
                                   1e-8).is_rectifying, False)


def test_SlantVerdict():
    verdict = SlantVerdict(1 / (2 * np.sqrt(2)), 1e-12, 1e-6)
    npt.assert_equal(verdict.is_slant, True)
    npt.assert_almost_equal(verdict.implied_cos_theta, 1 / 3)
    # Negative sigma means an obtuse angle:
    npt.assert_equal(SlantVerdict(-1, 0, 1e-6).implied_theta > np.pi / 2,
                     True)
    verdict = SlantVerdict(0.3, 0.1, 1e-6)
    npt.assert_equal(verdict.is_slant, False)
    npt.assert_equal(np.isnan(verdict.implied_theta), True)


def test_rectifying_fit():
    curve = make_rs_helix(EXAMPLE1, domain=(-3, 3))
    fit = rectifying_fit(sample_curve(curve, n=200))
    npt.assert_allclose([fit.c1_hat, fit.c2_hat], [1, 0], atol=1e-8)
    npt.assert_array_less(fit.rms_residual, 1e-9)
    npt.assert_almost_equal(fit.r2, 1)
    npt.assert_equal(fit.n_used, 200)
    npt.assert_equal(fit.is_rectifying, True)

    fit = rectifying_fit(sample_curve(make_rs_helix(EXAMPLE2), n=512))
    npt.assert_allclose([fit.c1_hat, fit.c2_hat], [0.5, -0.2], atol=1e-8)
    npt.assert_equal(fit.is_rectifying, True)

    fit = rectifying_fit(sample_curve(CircularHelix(1, 2), n=100))
    npt.assert_allclose(fit.c1_hat, 0, atol=1e-8)
    npt.assert_equal(fit.is_rectifying, False)


def test_rectifying_fit_sampled():
    # Positions only: the Frenet apparatus comes from the samples
    curve = make_rs_helix(EXAMPLE1, domain=(-3, 3))
    samples = sample_curve(curve, n=1001, with_frenet=False)
    fit = rectifying_fit(samples)
    npt.assert_allclose([fit.c1_hat, fit.c2_hat], [1, 0], atol=1e-5)
    npt.assert_equal(fit.tolerance, Tolerances().fit_sampled)
    npt.assert_equal(fit.is_rectifying, True)


def test_rectifying_fit_errors():
    curve = make_rs_helix(EXAMPLE1)
    with pytest.raises(InsufficientSamples):
        rectifying_fit(sample_curve(curve, grid=[0, 1]))
    with pytest.raises(CurvatureVanishes):
        rectifying_fit(sample_curve(StraightLine(), n=50, with_frenet=False))
    with pytest.raises(TypeError):
        rectifying_fit(curve)


def test_slant_verdict():
    verdict = slant_verdict(sample_curve(make_rs_helix(EXAMPLE1), n=512))
    npt.assert_allclose(verdict.sigma_mean, 1 / (2 * np.sqrt(2)), atol=1e-9)
    npt.assert_array_less(verdict.sigma_max_dev, 1e-9)
    npt.assert_allclose(verdict.implied_cos_theta, 1 / 3, atol=1e-8)

    verdict = slant_verdict(sample_curve(make_rs_helix(EXAMPLE2), n=512))
    npt.assert_allclose(verdict.sigma_mean, 1 / np.sqrt(99), atol=1e-9)
    npt.assert_equal(verdict.is_slant, True)

    verdict = slant_verdict(sample_curve(CircularHelix(1, 2), n=100))
    npt.assert_allclose(verdict.sigma_mean, 0, atol=1e-12)
    npt.assert_equal(verdict.is_slant, True)
    npt.assert_almost_equal(verdict.implied_theta, np.pi / 2)


def test_slant_verdict_errors():
    helix = CircularHelix(1, 2)
    frame = frenet_at(helix, 0.0)
    samples = integrate_frenet(lambda s: helix.kappa, lambda s: helix.tau,
                               np.linspace(0, 1, 11),
                               (frame.t, frame.n, frame.b))
    with pytest.raises(MalformedInput):
        slant_verdict(samples)
    with pytest.raises(InsufficientSamples):
        slant_verdict(sample_curve(helix, grid=[0, 1]))


def test_rectifying_decomposition():
    curve = make_rs_helix(EXAMPLE1)
    s = curve.grid(100)
    dec = rectifying_decomposition(curve, s)
    npt.assert_equal(isinstance(dec, RectifyingDecomposition), True)
    npt.assert_array_less(dec.normal_leak_max, 1e-9)
    npt.assert_allclose(dec.reconstruct(frenet_at(curve, s)), curve(s),
                        atol=1e-10)
    dec = rectifying_decomposition(curve, 0.0)
    npt.assert_allclose(dec.lambda_ ** 2 + dec.mu ** 2, 1, atol=1e-12)
    # Samples work as well:
    dec = rectifying_decomposition(sample_curve(curve, grid=s))
    npt.assert_array_less(dec.normal_leak_max, 1e-9)
    # The unit circle lies along its negative normal:
    dec = rectifying_decomposition(CircularHelix(), 0.0)
    npt.assert_allclose(dec.normal_leak, -1, atol=1e-12)
    with pytest.raises(ValueError):
        rectifying_decomposition(curve)
    with pytest.raises(TypeError):
        rectifying_decomposition(np.zeros((3, 3)), 0.0)


def test_ode_residual():
    curve = make_rs_helix(EXAMPLE1)
    s = np.array([-2.0, -1, 0, 1, 2])
    check = ode_residual(curve, EXAMPLE1, s)
    npt.assert_equal(isinstance(check, OdeCheck), True)
    npt.assert_equal(check.method, 'closed-form')
    npt.assert_array_less(check.residual_norm, 1e-9)
    npt.assert_equal(check.floor, None)
    npt.assert_equal(check.passes(1e-9), True)
    # v(0) = -t(0) since f(0) = 0:
    npt.assert_allclose(check.v[2], -frenet_at(curve, 0.0).t, atol=1e-12)
    check = ode_residual(curve, EXAMPLE1, s, method='stencil')
    npt.assert_array_less(check.residual_norm, 1e-6)
    # The stencil carries its rounding floor, well below 1e-6 here:
    npt.assert_equal(check.floor.shape, s.shape)
    npt.assert_array_less(check.floor, 1e-8)
    npt.assert_equal(check.passes(1e-6), True)
    npt.assert_allclose(check.v[2], [0, 1, 0], atol=1e-12)
    # Scalar input:
    check = ode_residual(curve, EXAMPLE1, 0.5)
    npt.assert_equal(check.v.shape, (3,))
    npt.assert_array_less(check.residual_norm, 1e-9)


def test_ode_residual_kappa_scale():
    curve = make_rs_helix(EXAMPLE1)
    s = np.linspace(-2, 2, 9)
    # v = n'/kappa is homogeneous in kappa, the closed-form residual cannot
    # see a scaled curvature:
    check = ode_residual(curve, EXAMPLE1, s, kappa_scale=1.01)
    npt.assert_array_less(check.residual_norm, 1e-9)
    # v = -t + (tau/kappa) b is not:
    check = ode_residual(curve, EXAMPLE1, s, method='stencil',
                         kappa_scale=1.01)
    npt.assert_equal(np.max(check.residual_norm) > 1e-3, True)


def test_ode_residual_errors():
    curve = make_rs_helix(EXAMPLE1)
    with pytest.raises(ValueError):
        ode_residual(curve, EXAMPLE1, 0.0, method='euler')
    with pytest.raises(InvalidParams):
        ode_residual(curve, (1, 0, 1.2), 0.0)
    fd = FiniteDifferenceCurve(curve, domain=(-3, 3))
    with pytest.raises(ValueError):
        ode_residual(fd, EXAMPLE1, 0.0)
    with pytest.raises(StencilOutOfDomain):
        ode_residual(fd, EXAMPLE1, 3.0, method='stencil')
    for method in ('closed-form', 'stencil'):
        with pytest.raises(CurvatureVanishes):
            ode_residual(StraightLine(), EXAMPLE1, 0.0, method=method)


@pytest.mark.parametrize('params', (EXAMPLE1, EXAMPLE2,
                                    FamilyParams(-1.2, 0.8, 2.0)))
def test_witnesses(params):
    curve = make_rs_helix(params)
    s = curve.grid(201)
    f = params.f(s)
    npt.assert_array_less(norm(v_identity_residual(curve, params, s)) /
                          (1 + np.abs(f)), 1e-9)
    npt.assert_array_less(norm(v_prime_residual(curve, params, s)), 1e-6)
    npt.assert_array_less(norm(v_second_residual(curve, params, s)), 1e-6)
    npt.assert_array_less(np.abs(kappa_identity_residual(curve, params, s)),
                          1e-6)


def test_witnesses_kappa_scale():
    curve = make_rs_helix(EXAMPLE1)
    s = np.linspace(-2, 2, 9)
    off = norm(v_identity_residual(curve, EXAMPLE1, s, kappa_scale=1.01))
    npt.assert_equal(np.max(off) > 1e-3, True)
    off = norm(v_second_residual(curve, EXAMPLE1, s, kappa_scale=1.01))
    npt.assert_equal(np.max(off) > 1e-3, True)
    # The curvature law itself is homogeneous:
    off = kappa_identity_residual(curve, EXAMPLE1, s, kappa_scale=1.01)
    npt.assert_array_less(np.abs(off), 1e-6)
    kappa, _ = closed_form_kappa_tau(EXAMPLE1, s)
    npt.assert_array_less(0, kappa)
