"""`classify_full`, `verify_family`, `random_family_params`,
   `parameter_sweep`"""
import logging

import numpy as np

from ..curves.frenet import frame_residual, frenet_at, speed
from ..curves.samples import CurveSamples
from ..family.helix import (axis_components, closed_form_kappa_tau, cone_of,
                            cone_residual, make_rs_helix)
from ..family.params import FamilyParams
from ..indicatrix.base import indicatrix, latitude_check
from ..utils.base import InvalidParams
from ..utils.constants import (DEFAULT_DOMAIN, ROUNDING_ULPS,
                               VERIFY_GRID_SIZE)
from ..utils.geometry import dot, norm
from ..utils.parallel import parfor
from ..utils.tolerances import Tolerances
from ..version import __version__
from .base import (_with_frenet, ode_residual, v_identity_residual,
                   v_prime_residual, v_second_residual,
                   kappa_identity_residual,
                   rectifying_decomposition, rectifying_fit, slant_verdict)
from .report import CheckResult, VerificationReport

logger = logging.getLogger(__name__)

#: Parameter box of randomized sweeps: |c1|, c2 and theta ranges.
SWEEP_C1 = (0.1, 5.0)
SWEEP_C2 = (-2.0, 2.0)
SWEEP_THETA = (0.1, np.pi / 2 - 0.1)

#: Points of the stencil ODE check, spread over the whole grid.
STENCIL_CHECK_POINTS = 101


def _grid_provenance(s):
    return {'s_min': float(s[0]), 's_max': float(s[-1]), 'n': int(s.size)}


def _check_points(grid, n=STENCIL_CHECK_POINTS):
    idx = np.unique(np.linspace(0, grid.size - 1, num=n).round().astype(int))
    return grid[idx]


def _ratio_floor(curve, grid):
    # Rounding of tau/kappa = det(alpha', alpha'', alpha''') / kappa³
    kappa = norm(curve(grid, 2))
    spread = (norm(curve(grid, 3)) / kappa ** 2 + 1 +
              np.abs(curve.params.f(grid)))
    return ROUNDING_ULPS * np.finfo(float).eps * spread


def classify_full(samples, tolerances=None):
    """Classify sampled data as slant helix, rectifying curve, or both

    Aggregates :py:func:`rectifying_fit`, :py:func:`slant_verdict` and the
    position test of :py:func:`rectifying_decomposition`. The fit and the
    position test are reported separately; ``verdict`` requires all three.

    .. versionadded:: 0.1

    Parameters
    ----------
    samples : :py:class:`~rshelix.curves.CurveSamples`
        Samples of a unit-speed curve
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    report : :py:class:`~rshelix.classify.VerificationReport`
        Checks 'rectifying_fit', 'slant' and 'rectifying_position'; the
        summary carries 'rectifying_fit', 'slant', 'normal_leak_max' and
        'verdict'
    """
    if tolerances is None:
        tolerances = Tolerances()
    samples = _with_frenet(samples, tolerances)
    backend = samples.frenet.backend
    fit = rectifying_fit(samples, tolerances=tolerances)
    slant = slant_verdict(samples, tolerances=tolerances)
    leak = rectifying_decomposition(samples,
                                    tolerances=tolerances).normal_leak_max
    checks = [
        CheckResult('rectifying_fit', fit.rms_residual, fit.tolerance,
                    passed=fit.is_rectifying),
        CheckResult('slant', slant.sigma_max_dev, slant.tolerance),
        CheckResult('rectifying_position', leak,
                    tolerances.for_backend('leak', backend)),
    ]
    verdict = all(check.passed for check in checks)
    summary = {
        'rectifying_fit': {'c1': fit.c1_hat, 'c2': fit.c2_hat,
                           'rms': fit.rms_residual, 'r2': fit.r2,
                           'is_rectifying': fit.is_rectifying},
        'slant': {'sigma_mean': slant.sigma_mean,
                  'max_dev': slant.sigma_max_dev,
                  'is_slant': slant.is_slant,
                  'implied_theta': slant.implied_theta},
        'normal_leak_max': leak,
        'verdict': verdict,
    }
    provenance = {'grid': _grid_provenance(samples.s), 'backend': backend,
                  'version': __version__}
    logger.info(f'Classified {len(samples)} samples: rectifying='
                f'{fit.is_rectifying}, slant={slant.is_slant}, '
                f'normal leak={leak:.3g}')
    return VerificationReport(checks, provenance=provenance, summary=summary)


def verify_family(params, grid=None, tolerances=None, kappa_scale=1.0):
    """Run every closed-form check on one family member

    All residuals are absolute and compared against the tolerances as
    stated. Two checks carry a rounding floor, because their tolerance lies
    below what double precision can deliver on steep members far from the
    zero of f:

    * ``tau_kappa_line``: tau/kappa is rounded to about
      eps |alpha'''| / kappa², which grows like f² / tan(theta).
    * ``ode_stencil``: the 5-point second-derivative stencil with step
      1e-4 (1 + |s|) amplifies the rounding of v = -t + (tau/kappa) b by
      (16/3) / step².

    A floor counts ``ROUNDING_ULPS`` machine epsilons per evaluation. Such a
    check passes where, point by point, its residual is within the larger of
    the tolerance and the floor; the largest floor is reported next to the
    residual. The stencil ODE check runs on 101 points spread over the
    whole grid.

    .. versionadded:: 0.1

    Parameters
    ----------
    params : :py:class:`~rshelix.family.FamilyParams`
        Family member
    grid : array-like, optional
        Arc-length values, by default 1001 uniform points on [-10, 10]
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional
    kappa_scale : float, optional
        Multiplies every measured curvature before the checks. A value other
        than 1 corrupts the data; the suite is expected to fail.

    Returns
    -------
    report : :py:class:`~rshelix.classify.VerificationReport`
    """
    if not isinstance(params, FamilyParams):
        raise InvalidParams(f'Expected FamilyParams, not {type(params)}.')
    if tolerances is None:
        tolerances = Tolerances()
    if grid is None:
        grid = np.linspace(*DEFAULT_DOMAIN, num=VERIFY_GRID_SIZE)
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if grid.size < 3:
        raise ValueError(f'The verification grid needs at least 3 points, '
                         f'not {grid.size}.')
    domain = (min(DEFAULT_DOMAIN[0], grid.min()),
              max(DEFAULT_DOMAIN[1], grid.max()))
    curve = make_rs_helix(params, domain=domain)
    tol = tolerances
    f = params.f(grid)
    frenet = frenet_at(curve, grid, tolerances=tol).with_kappa_scale(
        kappa_scale)
    samples = CurveSamples(grid, curve(grid), frenet=frenet,
                           backend=curve.backend, tolerances=tol)
    checks = []

    def add(name, residual, tolerance, passed=None, floor=None):
        if floor is not None:
            passed = bool(np.all(residual <= np.maximum(tolerance, floor)))
            floor = np.max(floor)
        checks.append(CheckResult(name, np.max(residual), tolerance,
                                  passed=passed, floor=floor))

    add('unit_speed', np.abs(speed(curve, grid) - 1), tol.speed)
    add('frame', frame_residual(frenet), tol.frame)
    kappa_law, _ = closed_form_kappa_tau(params, grid)
    add('curvature_law', np.abs(frenet.kappa - kappa_law), tol.law)
    add('tau_kappa_line', np.abs(frenet.ratio - f), tol.line,
        floor=_ratio_floor(curve, grid))
    fit = rectifying_fit(samples, tolerances=tol)
    add('rectifying_fit', abs(fit.c1_hat - params.c1) +
        abs(fit.c2_hat - params.c2), tol.fit)
    slant = slant_verdict(samples, tolerances=tol)
    add('sigma_constant', slant.sigma_max_dev, tol.sigma_law)
    add('sigma_value', abs(slant.sigma_mean - params.sigma), tol.sigma_law)
    alpha = curve(grid)
    add('cone', np.abs(cone_residual(alpha, cone_of(params))), tol.cone)
    add('rectifying_position', np.abs(dot(alpha, frenet.n)), tol.leak)
    ode = ode_residual(curve, params, grid, method='closed-form',
                       kappa_scale=kappa_scale, tolerances=tol)
    add('ode_closed_form', ode.residual_norm, tol.ode)
    ode = ode_residual(curve, params, _check_points(grid), method='stencil',
                       kappa_scale=kappa_scale, tolerances=tol)
    add('ode_stencil', ode.residual_norm, tol.ode_stencil, floor=ode.floor)
    add('v_identity', norm(v_identity_residual(
        curve, params, grid, kappa_scale=kappa_scale, tolerances=tol)),
        tol.ode)
    add('v_prime_witness', norm(v_prime_residual(
        curve, params, grid, kappa_scale=kappa_scale, tolerances=tol)),
        tol.witness)
    add('v_second_witness', norm(v_second_residual(
        curve, params, grid, kappa_scale=kappa_scale, tolerances=tol)),
        tol.witness)
    add('kappa_identity', np.abs(kappa_identity_residual(
        curve, params, grid, kappa_scale=kappa_scale, tolerances=tol)),
        tol.witness)
    axis = axis_components(params, grid)
    add('axis', norm(axis.reconstruct(frenet.t, frenet.n, frenet.b) -
                     np.array([0.0, 0.0, 1.0])), tol.axis)
    add('axis_unit', np.abs(axis.norm_sq() - 1), tol.axis_unit)
    trace = indicatrix(curve, 'normal', grid=grid, tolerances=tol)
    mean_cos, max_dev = latitude_check(trace)
    add('normal_latitude', max(max_dev, abs(mean_cos - params.cos_theta)),
        tol.latitude)
    report = VerificationReport(checks, provenance={
        'params': params.to_dict(), 'grid': _grid_provenance(grid),
        'backend': curve.backend, 'kappa_scale': float(kappa_scale),
        'version': __version__})
    if report.overall:
        logger.info(f'{params}: all {len(report)} checks pass')
    else:
        logger.info(f'{params}: failed {", ".join(report.failed)}')
    return report


def random_family_params(n, seed=0):
    """Reproducible random family members from the sweep box

    .. versionadded:: 0.1

    Parameters
    ----------
    n : int
        Number of members
    seed : int, optional
        Seed of :py:func:`numpy.random.default_rng`
    """
    rng = np.random.default_rng(seed)
    c1 = rng.uniform(*SWEEP_C1, size=n) * rng.choice([-1, 1], size=n)
    c2 = rng.uniform(*SWEEP_C2, size=n)
    theta = rng.uniform(*SWEEP_THETA, size=n)
    return [FamilyParams(a, b, c) for a, b, c in zip(c1, c2, theta)]


def parameter_sweep(n=50, seed=0, grid=None, tolerances=None, n_jobs=-1,
                    engine='joblib', scheduler='threading'):
    """Verify randomly drawn family members in parallel

    .. versionadded:: 0.1

    Parameters
    ----------
    n : int, optional
        Number of members
    seed : int, optional
        Random seed
    grid : array-like, optional
        Arc-length grid passed to :py:func:`verify_family`
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional
    n_jobs, engine, scheduler : optional
        Passed to :py:func:`~rshelix.utils.parfor`

    Returns
    -------
    reports : list of :py:class:`~rshelix.classify.VerificationReport`
        One per member, in draw order
    """
    if n < 1:
        raise ValueError(f'"n" must be positive, not {n}.')
    members = random_family_params(n, seed=seed)
    reports = parfor(verify_family, members, n_jobs=n_jobs, engine=engine,
                     scheduler=scheduler,
                     func_kwargs={'grid': grid, 'tolerances': tolerances})
    n_failed = sum(not report.overall for report in reports)
    logger.info(f'Sweep of {n} members (seed {seed}): {n_failed} failed')
    return reports
