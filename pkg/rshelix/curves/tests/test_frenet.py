import numpy as np
import pytest
import numpy.testing as npt

from rshelix.curves import (FrenetApparatus, frenet_at, speed,
                            frame_residual, sigma_from, finite_difference,
                            FiniteDifferenceCurve, StraightLine,
                            CircularHelix)
from rshelix.classify import random_family_params
from rshelix.family import FamilyParams, make_rs_helix
from rshelix.utils import CurvatureVanishes, OutOfDomain, Tolerances
from rshelix.utils.testing import assert_orthonormal_frame

EXAMPLE1 = FamilyParams.from_cos_theta(1, 0, 1 / 3)
EXAMPLE2 = FamilyParams.from_cos_theta(0.5, -0.2, 0.1)
SWEEP = random_family_params(50, seed=0)


def test_frenet_at_example1():
    curve = make_rs_helix(EXAMPLE1)
    frenet = frenet_at(curve, 0.0)
    npt.assert_allclose(frenet.kappa, 2 * np.sqrt(2), atol=1e-9)
    npt.assert_allclose(frenet.tau, 0, atol=1e-9)
    npt.assert_allclose(frenet.t, [0, -1, 0], atol=1e-12)
    npt.assert_allclose(frenet.n, [2 * np.sqrt(2) / 3, 0, 1 / 3], atol=1e-12)
    npt.assert_allclose(frenet.b, [-1 / 3, 0, 2 * np.sqrt(2) / 3],
                        atol=1e-12)
    frenet = frenet_at(curve, 1.0)
    npt.assert_allclose(frenet.kappa, 1, atol=1e-9)
    npt.assert_allclose(frenet.tau, 1, atol=1e-9)
    # sigma = cot(theta) everywhere:
    frenet = frenet_at(curve, np.linspace(-10, 10, 101))
    npt.assert_allclose(frenet.sigma, 1 / (2 * np.sqrt(2)), atol=1e-9)
    npt.assert_equal(frenet.backend, 'closed-form')


def test_frenet_at_frame():
    for params in (EXAMPLE1, EXAMPLE2):
        curve = make_rs_helix(params)
        s = curve.grid(1000)
        frenet = frenet_at(curve, s)
        npt.assert_equal(frenet.t.shape, (1000, 3))
        npt.assert_array_less(frame_residual(frenet), 1e-8)
        assert_orthonormal_frame(frenet.t, frenet.n, frenet.b, atol=1e-8)

    # Finite-difference backend:
    curve = make_rs_helix(EXAMPLE1).to_finite_difference()
    frenet = frenet_at(curve, curve.grid(101))
    npt.assert_equal(frenet.backend, 'finite-difference')
    npt.assert_array_less(frame_residual(frenet), 1e-5)


def test_frenet_equations():
    # t' = kappa n and b' = -tau n along the curve
    curve = make_rs_helix(EXAMPLE2)
    for s0 in (-2.0, 0.0, 0.7, 3.0):
        frenet = frenet_at(curve, s0)
        step = 1e-4 * (1 + abs(s0))
        dt = finite_difference(lambda s: frenet_at(curve, s,
                                                   with_sigma=False).t,
                               s0, 1, step)
        db = finite_difference(lambda s: frenet_at(curve, s,
                                                   with_sigma=False).b,
                               s0, 1, step)
        dn = finite_difference(lambda s: frenet_at(curve, s,
                                                   with_sigma=False).n,
                               s0, 1, step)
        npt.assert_allclose(dt, frenet.kappa * frenet.n, atol=1e-5)
        npt.assert_allclose(db, -frenet.tau * frenet.n, atol=1e-5)
        npt.assert_allclose(dn, -frenet.kappa * frenet.t +
                            frenet.tau * frenet.b, atol=1e-5)


def test_backend_equivalence():
    closed = make_rs_helix(EXAMPLE1)
    fd = closed.to_finite_difference()
    s = np.linspace(-10, 10, 201)
    exact = frenet_at(closed, s)
    approx = frenet_at(fd, s)
    npt.assert_allclose(approx.kappa, exact.kappa, atol=1e-5)
    npt.assert_allclose(approx.tau, exact.tau, atol=1e-5)
    npt.assert_allclose(approx.sigma, exact.sigma, atol=1e-5)
    # Frame vectors on the [-3, 3] grid:
    s = np.linspace(-3, 3, 1001)
    exact = frenet_at(closed, s, with_sigma=False)
    approx = frenet_at(fd, s, with_sigma=False)
    for vec in ('t', 'n', 'b'):
        npt.assert_allclose(getattr(approx, vec), getattr(exact, vec),
                            atol=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize('params', SWEEP,
                         ids=[f'member{i}' for i in range(len(SWEEP))])
def test_backend_equivalence_sweep(params):
    closed = make_rs_helix(params)
    fd = closed.to_finite_difference()
    s = np.linspace(-10, 10, 201)
    exact = frenet_at(closed, s)
    approx = frenet_at(fd, s)
    npt.assert_allclose(approx.kappa, exact.kappa, atol=1e-5)
    npt.assert_allclose(approx.tau, exact.tau, atol=1e-5)
    # Rounding in the nested stencil grows like |f cot(theta)|³, beyond 4
    # double precision cannot resolve sigma to 1e-5:
    resolvable = np.abs(params.f(s) * params.sigma) <= 4
    npt.assert_allclose(approx.sigma[resolvable], exact.sigma[resolvable],
                        atol=1e-5)


def test_backend_equivalence_steep_member():
    # Strongly curved near f = 0, slowly varying far from it
    params = FamilyParams(4.677, 0.5, 1.439)
    closed = make_rs_helix(params)
    s = np.linspace(-10, 10, 101)
    exact = frenet_at(closed, s)
    approx = frenet_at(closed.to_finite_difference(), s)
    npt.assert_allclose(approx.kappa, exact.kappa, atol=1e-5)
    npt.assert_allclose(approx.tau, exact.tau, atol=1e-5)
    resolvable = np.abs(params.f(s) * params.sigma) <= 4
    npt.assert_equal(np.count_nonzero(resolvable) > 50, True)
    npt.assert_allclose(approx.sigma[resolvable], exact.sigma[resolvable],
                        atol=1e-5)


def test_frenet_at_errors():
    with pytest.raises(CurvatureVanishes):
        frenet_at(StraightLine(), 0.0)
    with pytest.raises(OutOfDomain):
        frenet_at(make_rs_helix(EXAMPLE1), 10.5)
    # A coarser floor accepts what a stricter one rejects:
    helix = CircularHelix(radius=1e-3, pitch=100)
    frenet_at(helix, 0.0)
    with pytest.raises(CurvatureVanishes):
        frenet_at(helix, 0.0, tolerances=Tolerances(eps_kappa=1e-2))


def test_frenet_at_circular_helix():
    helix = CircularHelix(radius=2, pitch=np.pi)
    frenet = frenet_at(helix, np.linspace(-5, 5, 11))
    npt.assert_allclose(frenet.kappa, helix.kappa, atol=1e-12)
    npt.assert_allclose(frenet.tau, helix.tau, atol=1e-12)
    npt.assert_allclose(frenet.sigma, 0, atol=1e-12)
    # Finite-difference sigma:
    frenet = frenet_at(helix.to_finite_difference(), 0.0)
    npt.assert_allclose(frenet.sigma, 0, atol=1e-6)


def test_speed():
    npt.assert_allclose(speed(make_rs_helix(EXAMPLE1), 0.0), 1, atol=1e-9)
    npt.assert_allclose(speed(make_rs_helix(EXAMPLE2), 2.0), 1, atol=1e-9)
    npt.assert_equal(speed(StraightLine(), 3.0), 1.0)
    npt.assert_equal(speed(StraightLine(direction=(1, 1, 1)),
                           [0, 1]).shape, (2,))
    with pytest.raises(OutOfDomain):
        speed(StraightLine(), 11)


def test_FrenetApparatus():
    t, n, b = np.eye(3)
    frenet = FrenetApparatus(0.0, t, n, b, 2.0, 1.0, ratio_rate=0.5)
    npt.assert_almost_equal(frenet.ratio, 0.5)
    npt.assert_almost_equal(frenet.sigma, sigma_from(2.0, 1.0, 0.5))
    npt.assert_almost_equal(frenet.sigma, 4 / 5 ** 1.5 * 0.5)
    with pytest.raises(ValueError):
        frenet.t[0] = 1
    with pytest.raises(ValueError):
        FrenetApparatus([0.0, 1.0], t, n, b, 2.0, 1.0)
    npt.assert_equal(FrenetApparatus(0.0, t, n, b, 1.0, 0.0).sigma, None)
    # Left-handed frame:
    npt.assert_almost_equal(frame_residual(FrenetApparatus(0.0, t, n, -b,
                                                           1.0, 0.0)), 2)


def test_FrenetApparatus_with_kappa_scale():
    curve = make_rs_helix(EXAMPLE1)
    frenet = frenet_at(curve, np.linspace(-3, 3, 31))
    npt.assert_equal(frenet.with_kappa_scale(1) is frenet, True)
    scaled = frenet.with_kappa_scale(1.01)
    npt.assert_allclose(scaled.kappa, 1.01 * frenet.kappa)
    npt.assert_equal(scaled.tau, frenet.tau)
    npt.assert_equal(scaled.t, frenet.t)
    # sigma is no longer constant:
    npt.assert_equal(np.ptp(scaled.sigma) > 1e-3, True)
    with pytest.raises(ValueError):
        frenet.with_kappa_scale(0)


def test_FrenetApparatus_take():
    curve = make_rs_helix(EXAMPLE2)
    frenet = frenet_at(curve, np.linspace(-3, 3, 31))
    sub = frenet.take(slice(2, 5))
    npt.assert_equal(len(sub), 3)
    npt.assert_equal(sub.sigma, frenet.sigma[2:5])
    npt.assert_equal(sub.n, frenet.n[2:5])


def test_frenet_at_finite_difference_curve_edges():
    # Without extra support, stencils must stay inside the domain
    curve = FiniteDifferenceCurve(make_rs_helix(EXAMPLE1),
                                  domain=(-3, 3))
    frenet_at(curve, 0.0)
    with pytest.raises(OutOfDomain):
        frenet_at(curve, 3.0)
