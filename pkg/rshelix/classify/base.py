"""`RectifyingFit`, `SlantVerdict`, `RectifyingDecomposition`, `OdeCheck`,
   `rectifying_fit`, `slant_verdict`, `rectifying_decomposition`,
   `ode_residual`, `v_identity_residual`, `v_prime_residual`,
   `v_second_residual`, `kappa_identity_residual`"""
import logging

import numpy as np
import scipy.stats as spst

from ..curves.base import Curve
from ..curves.finite_difference import stencil_weights
from ..curves.frenet import frenet_at, frame_from_derivatives
from ..curves.jets import Jet
from ..curves.samples import CurveSamples, frenet_samples
from ..family.helix import ode_coefficient
from ..family.params import FamilyParams
from ..utils.base import (Frozen, PrettyPrint, freeze_array,
                          CurvatureVanishes, InsufficientSamples,
                          InvalidParams, MalformedInput)
from ..utils.constants import ODE_STEP, ROUNDING_ULPS
from ..utils.geometry import cross, dot, norm
from ..utils.stats import max_deviation, r2_score
from ..utils.tolerances import Tolerances

logger = logging.getLogger(__name__)

#: Fewest usable rows for a fit or a constancy test.
MIN_FIT_SAMPLES = 3


def _with_frenet(samples, tolerances):
    if not isinstance(samples, CurveSamples):
        raise TypeError(f'Expected CurveSamples, not {type(samples)}.')
    if samples.frenet is None:
        samples = frenet_samples(samples, tolerances=tolerances)
    return samples


class RectifyingFit(Frozen, PrettyPrint):
    """Least-squares line through the (s, tau/kappa) samples

    A curve is rectifying iff tau/kappa = c1 s + c2 with c1 != 0. The fit is
    declared rectifying when the RMS residual stays within ``tolerance`` and
    the slope exceeds ``eps_slope`` in magnitude.

    .. versionadded:: 0.1

    """

    def __init__(self, c1_hat, c2_hat, rms_residual, r2, n_used, tolerance,
                 eps_slope):
        self.c1_hat = float(c1_hat)
        self.c2_hat = float(c2_hat)
        self.rms_residual = float(rms_residual)
        self.r2 = float(r2)
        self.n_used = int(n_used)
        self.tolerance = float(tolerance)
        self.is_rectifying = bool(self.rms_residual <= tolerance and
                                  abs(self.c1_hat) > eps_slope)
        self._freeze()

    def _pprint_params(self):
        return {'c1_hat': self.c1_hat, 'c2_hat': self.c2_hat,
                'rms_residual': self.rms_residual, 'r2': self.r2,
                'is_rectifying': self.is_rectifying}


class SlantVerdict(Frozen, PrettyPrint):
    """Constancy of sigma over the samples

    ``implied_theta`` is the cone angle arccot(sigma_mean) in (0, pi), and is
    NaN unless the curve is a slant helix.

    .. versionadded:: 0.1

    """

    def __init__(self, sigma_mean, sigma_max_dev, tolerance):
        self.sigma_mean = float(sigma_mean)
        self.sigma_max_dev = float(sigma_max_dev)
        self.tolerance = float(tolerance)
        self.is_slant = bool(self.sigma_max_dev <= tolerance)
        if self.is_slant:
            self.implied_theta = float(np.arctan2(1.0, self.sigma_mean))
        else:
            self.implied_theta = np.nan
        self._freeze()

    def _pprint_params(self):
        return {'sigma_mean': self.sigma_mean,
                'sigma_max_dev': self.sigma_max_dev,
                'is_slant': self.is_slant,
                'implied_theta': self.implied_theta}

    @property
    def implied_cos_theta(self):
        return float(np.cos(self.implied_theta))


class RectifyingDecomposition(Frozen, PrettyPrint):
    """Components of the position vector in the Frenet frame

    alpha = lambda_ t + normal_leak n + mu b; a rectifying curve has a
    vanishing ``normal_leak``.

    .. versionadded:: 0.1

    """

    def __init__(self, s, lambda_, mu, normal_leak):
        self.s = freeze_array(s)
        self.lambda_ = freeze_array(lambda_)
        self.mu = freeze_array(mu)
        self.normal_leak = freeze_array(normal_leak)
        self._freeze()

    def _pprint_params(self):
        return {'s': self.s, 'lambda_': self.lambda_, 'mu': self.mu,
                'normal_leak': self.normal_leak}

    @property
    def normal_leak_max(self):
        return float(np.max(np.abs(self.normal_leak)))

    def reconstruct(self, frenet):
        """Position lambda_ t + normal_leak n + mu b from a Frenet apparatus"""
        return (self.lambda_[..., None] * frenet.t +
                self.normal_leak[..., None] * frenet.n +
                self.mu[..., None] * frenet.b)


class OdeCheck(Frozen, PrettyPrint):
    """Residual of v'' + (c1 tan theta)² / (1 + f²)² v = 0, v = n'/kappa

    .. versionadded:: 0.1

    Parameters
    ----------
    s : array-like
        Arc-length values
    v, v_dd : array-like
        v and v'' at ``s``, shape ``s.shape + (3,)``
    coefficient : array-like
        (c1 tan theta)² / (1 + f²)² at ``s``
    method : {'closed-form', 'stencil'}
        How v'' was obtained
    floor : array-like, optional
        Rounding floor of the residual at ``s``, if one is known

    """

    def __init__(self, s, v, v_dd, coefficient, method, floor=None):
        self.s = freeze_array(s)
        self.v = freeze_array(v)
        self.v_dd = freeze_array(v_dd)
        self.coefficient = freeze_array(coefficient)
        self.residual = freeze_array(self.v_dd +
                                     self.coefficient[..., None] * self.v)
        self.method = method
        self.floor = None if floor is None else freeze_array(floor)
        self._freeze()

    def _pprint_params(self):
        return {'s': self.s, 'method': self.method,
                'residual_norm': self.residual_norm}

    @property
    def residual_norm(self):
        return norm(self.residual)

    def passes(self, tolerance):
        """Whether the residual is within ``tolerance`` or its floor"""
        bound = tolerance if self.floor is None else np.maximum(tolerance,
                                                                self.floor)
        return bool(np.all(self.residual_norm <= bound))


def rectifying_fit(samples, tolerances=None):
    """Fit tau/kappa = c1 s + c2 by ordinary least squares

    Rows with a curvature at or below ``eps_kappa`` are excluded.

    .. versionadded:: 0.1

    Parameters
    ----------
    samples : :py:class:`~rshelix.curves.CurveSamples`
        Samples; the Frenet apparatus is computed from the positions if it is
        not attached
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    fit : :py:class:`~rshelix.classify.RectifyingFit`

    Raises
    ------
    InsufficientSamples
        With fewer than three usable rows
    CurvatureVanishes
        If no row has a positive curvature
    """
    if tolerances is None:
        tolerances = Tolerances()
    samples = _with_frenet(samples, tolerances)
    frenet = samples.frenet
    usable = frenet.kappa > tolerances.eps_kappa
    if not np.any(usable):
        raise CurvatureVanishes('Curvature vanishes on every sample.')
    if np.count_nonzero(usable) < MIN_FIT_SAMPLES:
        raise InsufficientSamples(f'Need at least {MIN_FIT_SAMPLES} samples '
                                  f'with positive curvature, not '
                                  f'{np.count_nonzero(usable)}.')
    s = frenet.s[usable]
    ratio = frenet.tau[usable] / frenet.kappa[usable]
    slope, intercept, _, _, _ = spst.linregress(s, ratio)
    predicted = slope * s + intercept
    rms = np.sqrt(np.mean((ratio - predicted) ** 2))
    logger.debug(f'tau/kappa fit over {s.size} samples: c1={slope:.10g}, '
                 f'c2={intercept:.10g}, rms={rms:.3g}')
    return RectifyingFit(slope, intercept, rms, r2_score(ratio, predicted),
                         s.size, tolerances.for_backend('fit',
                                                        frenet.backend),
                         tolerances.eps_slope)


def slant_verdict(samples, tolerances=None):
    """Test whether sigma is constant over the samples

    .. versionadded:: 0.1

    Parameters
    ----------
    samples : :py:class:`~rshelix.curves.CurveSamples`
        Samples; the Frenet apparatus is computed from the positions if it is
        not attached
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    verdict : :py:class:`~rshelix.classify.SlantVerdict`
    """
    if tolerances is None:
        tolerances = Tolerances()
    samples = _with_frenet(samples, tolerances)
    frenet = samples.frenet
    if frenet.sigma is None:
        raise MalformedInput('The samples carry no sigma.')
    sigma = frenet.sigma[np.isfinite(frenet.sigma)]
    if sigma.size < MIN_FIT_SAMPLES:
        raise InsufficientSamples(f'Need at least {MIN_FIT_SAMPLES} values '
                                  f'of sigma, not {sigma.size}.')
    mean, max_dev = max_deviation(sigma)
    logger.debug(f'sigma over {sigma.size} samples: mean={mean:.10g}, '
                 f'max deviation={max_dev:.3g}')
    return SlantVerdict(mean, max_dev,
                        tolerances.for_backend('sigma', frenet.backend))


def rectifying_decomposition(curve, s=None, tolerances=None):
    """Split the position vector along t, n and b

    .. versionadded:: 0.1

    Parameters
    ----------
    curve : :py:class:`~rshelix.curves.Curve` or
            :py:class:`~rshelix.curves.CurveSamples`
        A curve evaluated at ``s``, or samples (``s`` is then ignored)
    s : float or array-like, optional
        Arc-length values, required for a curve
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    decomposition : :py:class:`~rshelix.classify.RectifyingDecomposition`
    """
    if tolerances is None:
        tolerances = Tolerances()
    if isinstance(curve, CurveSamples):
        samples = _with_frenet(curve, tolerances)
        frenet = samples.frenet
        alpha = samples.points
    elif isinstance(curve, Curve):
        if s is None:
            raise ValueError('"s" is required when decomposing a curve.')
        frenet = frenet_at(curve, s, tolerances=tolerances, with_sigma=False)
        alpha = curve(s)
    else:
        raise TypeError(f'Expected Curve or CurveSamples, not {type(curve)}.')
    return RectifyingDecomposition(frenet.s, dot(alpha, frenet.t),
                                   dot(alpha, frenet.b),
                                   dot(alpha, frenet.n))


def _check_params(params):
    if not isinstance(params, FamilyParams):
        raise InvalidParams(f'Expected FamilyParams, not {type(params)}.')
    return params


def _normal_jets(curve, s, eps_kappa, kappa_scale):
    # Jets of kappa, n and v = n'/kappa from alpha'' ... alpha^(5)
    if curve.max_order is not None and curve.max_order < 5:
        raise ValueError(f'{curve.__class__.__name__} provides derivatives up '
                         f'to order {curve.max_order}, the closed-form ODE '
                         f'check needs order 5. Use method="stencil".')
    accel = Jet.from_derivatives(np.stack([curve(s, k)
                                           for k in range(2, 6)]))
    kappa_sq = accel.dot(accel)
    if np.any(kappa_sq.coeffs[0] <= eps_kappa ** 2):
        smallest = np.sqrt(np.min(kappa_sq.coeffs[0]))
        raise CurvatureVanishes(f'Curvature {smallest:.3g} is below the '
                                f'floor {eps_kappa}.')
    kappa = kappa_sq.sqrt()
    normal = accel / kappa
    kappa = kappa * kappa_scale
    return kappa, normal, normal.diff() / kappa


def _v_stencil(curve, s, eps_kappa, kappa_scale):
    # v = -t + (tau/kappa) b at five nodes, then the second-derivative stencil
    step = np.asarray(ODE_STEP * (1.0 + np.abs(s)))
    offsets = np.arange(-2, 3, dtype=float).reshape((-1,) + (1,) * s.ndim)
    nodes = s[None, ...] + offsets * step
    d1, d2, d3 = (curve.stencil_eval(nodes, k) for k in (1, 2, 3))
    t, _, b, kappa, tau = frame_from_derivatives(d1, d2, d3, nodes, eps_kappa)
    v = -t + (tau / (kappa * kappa_scale))[..., None] * b
    weights = stencil_weights(2, 5)
    v_dd = np.tensordot(weights, v - v[2], axes=(0, 0)) / step[..., None] ** 2
    # Rounding floor: tau/kappa carries eps |alpha'''| / kappa², amplified by
    # sum(|w|) / step²
    spread = (norm(d3[2]) / kappa[2] ** 2 + 1 +
              np.abs(tau[2] / (kappa[2] * kappa_scale)))
    floor = (np.abs(weights).sum() * ROUNDING_ULPS * np.finfo(float).eps *
             spread / step ** 2)
    return v[2], v_dd, floor


def ode_residual(curve, params, s, method='closed-form', kappa_scale=1.0,
                 tolerances=None):
    """Residual of the second-order ODE satisfied by v = n'/kappa

    A rectifying slant helix with tau/kappa = c1 s + c2 on the cone of angle
    theta satisfies v'' + (c1 tan theta)² / (1 + f²)² v = 0. ``params`` is
    given explicitly, so the check does not depend on any fit.

    .. versionadded:: 0.1

    Parameters
    ----------
    curve : :py:class:`~rshelix.curves.Curve`
        The curve; ``method='closed-form'`` needs derivatives up to order 5
    params : :py:class:`~rshelix.family.FamilyParams`
        c1, c2 and theta entering the ODE
    s : float or array-like
        Arc-length values in the curve's domain
    method : {'closed-form', 'stencil'}, optional
        'closed-form' differentiates n/kappa with Taylor-jet arithmetic on
        the derivative oracle. 'stencil' evaluates v = -t + (tau/kappa) b at
        five nodes spaced 1e-4 (1 + |s|) apart and applies the 5-point
        second-derivative stencil; the check then carries the rounding
        floor of that stencil.
    kappa_scale : float, optional
        Multiplies every measured curvature (perturbation hook)
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    check : :py:class:`~rshelix.classify.OdeCheck`

    Raises
    ------
    CurvatureVanishes
        If the curvature vanishes at ``s`` or a stencil node
    StencilOutOfDomain
        If a stencil node leaves the curve's support
    """
    if tolerances is None:
        tolerances = Tolerances()
    params = _check_params(params)
    curve.check_domain(s)
    s = np.asarray(s, dtype=float)
    if method == 'closed-form':
        _, _, v = _normal_jets(curve, s, tolerances.eps_kappa, kappa_scale)
        v0, v_dd = v.derivative(0), v.derivative(2)
        floor = None
    elif method == 'stencil':
        if curve.backend != 'closed-form':
            logger.warning(f'Stencil ODE residual on a {curve.backend} curve '
                           f'differentiates noisy frames.')
        v0, v_dd, floor = _v_stencil(curve, s, tolerances.eps_kappa,
                                      kappa_scale)
    else:
        raise ValueError(f'Unknown method "{method}", choose "closed-form" '
                         f'or "stencil".')
    return OdeCheck(s, v0, v_dd, ode_coefficient(params, s), method,
                    floor=floor)


def v_identity_residual(curve, params, s, kappa_scale=1.0, tolerances=None):
    """n'/kappa - (-t + f b), zero on the family

    .. versionadded:: 0.1

    """
    if tolerances is None:
        tolerances = Tolerances()
    params = _check_params(params)
    curve.check_domain(s)
    s = np.asarray(s, dtype=float)
    _, normal, v = _normal_jets(curve, s, tolerances.eps_kappa, kappa_scale)
    t = curve(s, 1)
    b = cross(t, normal.derivative(0))
    return v.derivative(0) - (-t + params.f(s)[..., None] * b)


def v_prime_residual(curve, params, s, kappa_scale=1.0, tolerances=None):
    """c1 b - (v' + kappa (1 + f²) n), zero on the family

    .. versionadded:: 0.1

    """
    if tolerances is None:
        tolerances = Tolerances()
    params = _check_params(params)
    curve.check_domain(s)
    s = np.asarray(s, dtype=float)
    kappa, normal, v = _normal_jets(curve, s, tolerances.eps_kappa,
                                    kappa_scale)
    n = normal.derivative(0)
    b = cross(curve(s, 1), n)
    weight = kappa.derivative(0) * (1 + params.f(s) ** 2)
    return params.c1 * b - (v.derivative(1) + weight[..., None] * n)


def v_second_residual(curve, params, s, kappa_scale=1.0, tolerances=None):
    """v'' + kappa (1 + f²) n', zero on the family

    .. versionadded:: 0.1

    """
    if tolerances is None:
        tolerances = Tolerances()
    params = _check_params(params)
    curve.check_domain(s)
    s = np.asarray(s, dtype=float)
    kappa, normal, v = _normal_jets(curve, s, tolerances.eps_kappa,
                                    kappa_scale)
    weight = kappa.derivative(0) * (1 + params.f(s) ** 2)
    return v.derivative(2) + weight[..., None] * normal.derivative(1)


def kappa_identity_residual(curve, params, s, kappa_scale=1.0,
                            tolerances=None):
    """(kappa (1 + f²))' + c1 f kappa, zero on the family

    .. versionadded:: 0.1

    """
    if tolerances is None:
        tolerances = Tolerances()
    params = _check_params(params)
    curve.check_domain(s)
    s = np.asarray(s, dtype=float)
    kappa, _, _ = _normal_jets(curve, s, tolerances.eps_kappa, kappa_scale)
    f = params.f(s)
    k0, k1 = kappa.derivative(0), kappa.derivative(1)
    return k1 * (1 + f ** 2) + 2 * params.c1 * f * k0 + params.c1 * f * k0
