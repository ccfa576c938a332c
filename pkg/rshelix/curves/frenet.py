"""`FrenetApparatus`, `frenet_at`, `frame_from_derivatives`, `speed`,
   `frame_residual`, `sigma_from`"""
import logging

import numpy as np

from ..utils.base import (Frozen, PrettyPrint, CurvatureVanishes,
                          StencilOutOfDomain, freeze_array)
from ..utils.constants import SIGMA_LEVELS, SIGMA_STEP
from ..utils.geometry import cross, dot, norm, triple
from ..utils.tolerances import Tolerances
from .finite_difference import stable_estimate, stencil_weights

logger = logging.getLogger(__name__)


def sigma_from(kappa, tau, ratio_rate):
    """Slant-helix invariant from curvature, torsion and (tau/kappa)'

    Computes :math:`\\sigma = \\kappa^2 / (\\kappa^2 + \\tau^2)^{3/2}
    (\\tau / \\kappa)'`, the geodesic curvature of the spherical image of the
    principal normal. A curve is a slant helix iff sigma is constant.

    .. versionadded:: 0.1

    """
    kappa = np.asarray(kappa, dtype=float)
    tau = np.asarray(tau, dtype=float)
    return kappa ** 2 / (kappa ** 2 + tau ** 2) ** 1.5 * ratio_rate


class FrenetApparatus(Frozen, PrettyPrint):
    """Frenet frame, curvature, torsion and sigma at one or more points

    All fields are read-only arrays. For scalar ``s`` the vectors have shape
    (3,); for an array ``s`` of shape (n,) they have shape (n, 3).

    .. versionadded:: 0.1

    Parameters
    ----------
    s : float or array-like
        Arc-length parameter(s)
    t, n, b : array-like
        Tangent, principal normal and binormal
    kappa, tau : float or array-like
        Curvature and torsion
    ratio_rate : float or array-like, optional
        The derivative (tau/kappa)'. If given, ``sigma`` is computed from it;
        otherwise ``sigma`` is None.
    backend : str, optional
        Backend tag of the data the apparatus was computed from

    """

    def __init__(self, s, t, n, b, kappa, tau, ratio_rate=None,
                 backend='closed-form'):
        self.s = freeze_array(s)
        self.t = freeze_array(t)
        self.n = freeze_array(n)
        self.b = freeze_array(b)
        self.kappa = freeze_array(kappa)
        self.tau = freeze_array(tau)
        for name in ('t', 'n', 'b'):
            if getattr(self, name).shape != self.s.shape + (3,):
                raise ValueError(f'"{name}" must have shape '
                                 f'{self.s.shape + (3,)}, not '
                                 f'{getattr(self, name).shape}.')
        if ratio_rate is None:
            self.ratio_rate = None
            self.sigma = None
        else:
            self.ratio_rate = freeze_array(ratio_rate)
            self.sigma = freeze_array(sigma_from(self.kappa, self.tau,
                                                 self.ratio_rate))
        self.backend = backend
        self._freeze()

    def _pprint_params(self):
        return {'s': self.s, 'kappa': self.kappa, 'tau': self.tau,
                'sigma': self.sigma, 'backend': self.backend}

    @property
    def ratio(self):
        """tau / kappa"""
        return self.tau / self.kappa

    def __len__(self):
        return self.s.size

    def take(self, idx):
        """Apparatus restricted to the rows ``idx`` of a 1-D sample"""
        rate = None if self.ratio_rate is None else self.ratio_rate[idx]
        return FrenetApparatus(self.s[idx], self.t[idx], self.n[idx],
                               self.b[idx], self.kappa[idx], self.tau[idx],
                               ratio_rate=rate, backend=self.backend)

    def with_kappa_scale(self, scale):
        """Copy with every curvature multiplied by ``scale``

        Torsion and frame are kept, so tau/kappa and its derivative shrink by
        ``scale`` and sigma is recomputed. This is the perturbation hook used
        to check that the verification suite notices a wrong curvature.
        """
        scale = float(scale)
        if scale == 1:
            return self
        if not scale > 0:
            raise ValueError(f'"scale" must be positive, not {scale}.')
        rate = None if self.ratio_rate is None else self.ratio_rate / scale
        return FrenetApparatus(self.s, self.t, self.n, self.b,
                               self.kappa * scale, self.tau, ratio_rate=rate,
                               backend=self.backend)


def speed(curve, s):
    """Speed |alpha'(s)|, equal to 1 for a unit-speed curve

    Parameters
    ----------
    curve : :py:class:`~rshelix.curves.Curve`
        The curve
    s : float or array-like
        Arc-length parameter(s) in the curve's domain
    """
    return norm(curve(s, 1))


def _kappa_tau(d1, d2, d3, eps_kappa, s):
    kappa = norm(d2)
    if np.any(kappa <= eps_kappa):
        bad = np.atleast_1d(np.asarray(s))[np.atleast_1d(kappa <= eps_kappa)]
        raise CurvatureVanishes(f'Curvature {np.min(kappa):.3g} is below the '
                                f'floor {eps_kappa} (at s={bad[:5]}).')
    return kappa, triple(d1, d2, d3) / kappa ** 2


def frame_from_derivatives(d1, d2, d3, s, eps_kappa):
    """Frenet frame, curvature and torsion from alpha', alpha'', alpha'''

    Returns ``(t, n, b, kappa, tau)``. Raises
    :py:class:`~rshelix.utils.CurvatureVanishes` where
    ``|alpha''| <= eps_kappa``; ``s`` only labels the error message.
    """
    kappa, tau = _kappa_tau(d1, d2, d3, eps_kappa, s)
    n = d2 / kappa[..., None]
    return d1, n, cross(d1, n), kappa, tau


def _ratio_rate_closed_form(d1, d2, d3, d4, kappa, tau):
    # kappa' = <d2, d3> / kappa, and det(d1, d2, d3)' = det(d1, d2, d4)
    dkappa = dot(d2, d3) / kappa
    det = tau * kappa ** 2
    dtau = triple(d1, d2, d4) / kappa ** 2 - 2 * det * dkappa / kappa ** 3
    return (dtau * kappa - tau * dkappa) / kappa ** 2


def _ratio_rate_stencil(curve, s, eps_kappa):
    # Ladder of 5-point central stencils on tau/kappa, halving the step
    steps = (0.5 ** np.arange(SIGMA_LEVELS).reshape((-1,) + (1,) * s.ndim) *
             SIGMA_STEP * (1.0 + np.abs(s)))
    offsets = np.arange(-2, 3, dtype=float).reshape((1, -1) + (1,) * s.ndim)
    nodes = s[None, None, ...] + offsets * steps[:, None, ...]
    lo, hi = curve.support
    inside = np.all((nodes >= lo) & (nodes <= hi), axis=1)
    nodes = np.clip(nodes, lo, hi)
    d1, d2, d3 = (curve.stencil_eval(nodes, k) for k in (1, 2, 3))
    kappa = norm(d2)
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = np.where(kappa > eps_kappa,
                         triple(d1, d2, d3) / kappa ** 3, np.nan)
    weights = stencil_weights(1, 5)
    rates = np.tensordot(weights, ratio - ratio[:, 2:3], axes=(0, 1)) / steps
    rates[~inside] = np.nan
    rate, _, best = stable_estimate(rates)
    if np.any(np.isnan(rate)):
        raise StencilOutOfDomain(f'No stencil on tau/kappa around '
                                 f's={s[np.isnan(rate)]} fits inside the '
                                 f'support [{lo}, {hi}].')
    logger.debug(f'tau/kappa steps {np.unique(best)} of {SIGMA_LEVELS}.')
    return rate


def frenet_at(curve, s, tolerances=None, with_sigma=True):
    """Frenet apparatus of a curve at one or more parameter values

    With t = alpha', n = alpha''/|alpha''| and b = t x n, curvature is
    ``|alpha''|`` and torsion ``det(alpha', alpha'', alpha''') / kappa²``.
    For closed-form curves (tau/kappa)' comes from the derivative oracle
    (order 4); for finite-difference curves from a ladder of 5-point
    stencils on the ratio, keeping the most stable step at each point.

    .. versionadded:: 0.1

    Parameters
    ----------
    curve : :py:class:`~rshelix.curves.Curve`
        The curve
    s : float or array-like
        Arc-length parameter(s) in the curve's domain
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional
        Provides the curvature floor ``eps_kappa``
    with_sigma : bool, optional
        Whether to compute (tau/kappa)' and sigma

    Returns
    -------
    frenet : :py:class:`~rshelix.curves.FrenetApparatus`

    Raises
    ------
    OutOfDomain
        If ``s`` lies outside the domain
    CurvatureVanishes
        If ``|alpha''(s)| <= eps_kappa``
    """
    if tolerances is None:
        tolerances = Tolerances()
    s = np.asarray(s, dtype=float)
    d1 = curve(s, 1)
    d2 = curve(s, 2)
    d3 = curve(s, 3)
    t, n, b, kappa, tau = frame_from_derivatives(d1, d2, d3, s,
                                                 tolerances.eps_kappa)
    ratio_rate = None
    if with_sigma:
        if curve.backend == 'closed-form':
            d4 = curve(s, 4)
            ratio_rate = _ratio_rate_closed_form(d1, d2, d3, d4, kappa, tau)
        else:
            ratio_rate = _ratio_rate_stencil(curve, s, tolerances.eps_kappa)
    return FrenetApparatus(s, t, n, b, kappa, tau, ratio_rate=ratio_rate,
                           backend=curve.backend)


def frame_residual(frenet):
    """Orthonormality and handedness residual of the Frenet frame

    Returns, per point, the largest entry of ``|F F^T - I|`` together with
    ``|det F - 1|``, where F has rows t, n, b.
    """
    frame = np.stack((frenet.t, frenet.n, frenet.b), axis=-2)
    gram = np.einsum('...ij,...kj->...ik', frame, frame)
    ortho = np.max(np.abs(gram - np.eye(3)), axis=(-2, -1))
    handed = np.abs(np.linalg.det(frame) - 1)
    return np.maximum(ortho, handed)
