"""`integrate_frenet`"""
import logging

import numpy as np
from scipy.integrate import solve_ivp

from ..utils.base import InsufficientSamples
from .frenet import FrenetApparatus
from .samples import CurveSamples

logger = logging.getLogger(__name__)


def _frenet_serret(s, y, kappa, tau):
    t, n, b = y[3:6], y[6:9], y[9:12]
    k = kappa(s)
    w = tau(s)
    return np.concatenate((t, k * n, -k * t + w * b, -w * n))


def integrate_frenet(kappa, tau, s_eval, frame, origin=(0, 0, 0), rtol=1e-11,
                     atol=1e-12):
    """Reconstruct a curve from its curvature and torsion

    Integrates the Frenet-Serret system alpha' = t, t' = kappa n,
    n' = -kappa t + tau b, b' = -tau n with
    :py:func:`scipy.integrate.solve_ivp` (DOP853), starting at ``s_eval[0]``.
    By the fundamental theorem of curves the result is unique once the
    initial position and frame are fixed.

    .. versionadded:: 0.1

    Parameters
    ----------
    kappa, tau : callable
        Curvature and torsion as functions of arc length
    s_eval : array-like
        Strictly increasing arc-length values at which to report the curve;
        integration starts at the first one
    frame : (t0, n0, b0)
        Orthonormal frame at ``s_eval[0]``
    origin : array-like, optional
        Position at ``s_eval[0]``
    rtol, atol : float, optional
        Integrator tolerances

    Returns
    -------
    samples : :py:class:`~rshelix.curves.CurveSamples`
        Positions with the integrated frame (no sigma) attached
    """
    s_eval = np.asarray(s_eval, dtype=float)
    if s_eval.ndim != 1 or s_eval.size < 2:
        raise InsufficientSamples('"s_eval" needs at least two values.')
    t0, n0, b0 = (np.asarray(v, dtype=float) for v in frame)
    y0 = np.concatenate((np.asarray(origin, dtype=float), t0, n0, b0))
    if y0.shape != (12,):
        raise ValueError('"origin" and the frame vectors must be 3-vectors.')
    sol = solve_ivp(_frenet_serret, (s_eval[0], s_eval[-1]), y0,
                    method='DOP853', t_eval=s_eval, rtol=rtol, atol=atol,
                    args=(kappa, tau))
    if not sol.success:
        raise RuntimeError(f'Frenet-Serret integration failed: '
                           f'{sol.message}')
    logger.debug(f'Integrated Frenet-Serret system with {sol.nfev} '
                 f'function evaluations.')
    y = sol.y.T
    frenet = FrenetApparatus(s_eval, y[:, 3:6], y[:, 6:9], y[:, 9:12],
                             np.vectorize(kappa)(s_eval),
                             np.vectorize(tau)(s_eval), backend='sampled')
    return CurveSamples(s_eval, y[:, :3], frenet=frenet, backend='sampled')
