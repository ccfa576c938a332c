"""`StraightLine`, `CircularHelix`, `ArcLengthCurve`"""
import logging

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from ..utils.constants import DEFAULT_DOMAIN
from ..utils.geometry import norm, normalize
from .base import ClosedFormCurve, FiniteDifferenceCurve
from .finite_difference import finite_difference

logger = logging.getLogger(__name__)


class StraightLine(ClosedFormCurve):
    """Unit-speed straight line ``origin + s * direction``

    Its curvature vanishes, so it has no Frenet frame.

    .. versionadded:: 0.1

    Parameters
    ----------
    direction : array-like, optional
        Direction of the line; normalized internally
    origin : array-like, optional
        Position at s = 0
    domain : (s_min, s_max), optional

    """

    def __init__(self, direction=(1, 0, 0), origin=(0, 0, 0),
                 domain=DEFAULT_DOMAIN):
        self.direction = normalize(direction)
        self.origin = np.asarray(origin, dtype=float)
        if self.direction.shape != (3,) or self.origin.shape != (3,):
            raise ValueError('"direction" and "origin" must be 3-vectors.')
        super(StraightLine, self).__init__(domain=domain)
        self._freeze()

    def _pprint_params(self):
        params = super(StraightLine, self)._pprint_params()
        params.update({'direction': self.direction, 'origin': self.origin})
        return params

    def _evaluate(self, s, order):
        s = s[..., None]
        if order == 0:
            return self.origin + s * self.direction
        if order == 1:
            return np.zeros_like(s) + self.direction
        return np.zeros(s.shape[:-1] + (3,))


class CircularHelix(ClosedFormCurve):
    """Unit-speed circular helix about the z axis

    .. math::

        \\alpha(s) = (r \\cos \\omega s, r \\sin \\omega s, c \\omega s),
        \\quad c = p / 2\\pi, \\quad \\omega = 1 / \\sqrt{r^2 + c^2}

    Curvature ``r w²`` and torsion ``c w²`` are constant, so sigma is zero
    and the tangent keeps a constant angle with the z axis. A pitch of zero
    gives the circle of radius r.

    .. versionadded:: 0.1

    Parameters
    ----------
    radius : float, optional
        Radius r > 0 of the supporting cylinder
    pitch : float, optional
        Rise p per full turn
    domain : (s_min, s_max), optional

    """

    def __init__(self, radius=1.0, pitch=0.0, domain=DEFAULT_DOMAIN):
        if not radius > 0:
            raise ValueError(f'"radius" must be positive, not {radius}.')
        self.radius = float(radius)
        self.pitch = float(pitch)
        super(CircularHelix, self).__init__(domain=domain)
        self._freeze()

    def _pprint_params(self):
        params = super(CircularHelix, self)._pprint_params()
        params.update({'radius': self.radius, 'pitch': self.pitch})
        return params

    @property
    def rise(self):
        """Height gained per radian, c = pitch / 2 pi"""
        return self.pitch / (2 * np.pi)

    @property
    def omega(self):
        return 1.0 / np.hypot(self.radius, self.rise)

    @property
    def kappa(self):
        return self.radius * self.omega ** 2

    @property
    def tau(self):
        return self.rise * self.omega ** 2

    def _evaluate(self, s, order):
        w = self.omega
        phase = w * s + order * np.pi / 2
        amp = self.radius * w ** order
        if order == 0:
            z = self.rise * w * s
        elif order == 1:
            z = np.full_like(s, self.rise * w)
        else:
            z = np.zeros_like(s)
        return np.stack((amp * np.cos(phase), amp * np.sin(phase), z),
                        axis=-1)


class ArcLengthCurve(FiniteDifferenceCurve):
    """Arc-length reparametrization of a regular parametric curve

    Given c(u) on [u_min, u_max], builds the unit-speed curve
    alpha(s) = c(u(s)) on [0, L], where L is the length of c and u(s)
    inverts the arc-length integral. Arc length is integrated with
    :py:func:`scipy.integrate.quad` and inverted with
    :py:func:`scipy.optimize.brentq`; derivatives then come from the
    finite-difference backend.

    .. versionadded:: 0.1

    Parameters
    ----------
    func : callable
        Vectorized parametric curve c(u), returning shape ``u.shape + (3,)``
    u_range : (u_min, u_max)
        Parameter interval
    derivative : callable, optional
        c'(u); estimated by central differences if not given
    n_knots : int, optional
        Number of knots of the cumulative arc-length table used to bracket
        the inversion
    steps : dict, optional
        Finite-difference step policy

    """

    def __init__(self, func, u_range, derivative=None, n_knots=129,
                 steps=None):
        if not callable(func):
            raise TypeError(f'"func" must be callable, not {type(func)}.')
        u_min, u_max = float(u_range[0]), float(u_range[1])
        if not u_min < u_max:
            raise ValueError(f'"u_range" must satisfy u_min < u_max, not '
                             f'{u_range}.')
        self.param_func = func
        self.param_derivative = derivative
        self.u_range = (u_min, u_max)
        self.knots = np.linspace(u_min, u_max, num=int(n_knots))
        pieces = [self._length(a, b) for a, b in zip(self.knots[:-1],
                                                      self.knots[1:])]
        self.cumulative = np.concatenate(([0.0], np.cumsum(pieces)))
        length = float(self.cumulative[-1])
        logger.debug(f'Reparametrizing {func} over {self.u_range}: length '
                     f'{length:.6g}.')
        super(ArcLengthCurve, self).__init__(self._position,
                                             domain=(0.0, length),
                                             steps=steps)

    def _pprint_params(self):
        params = super(ArcLengthCurve, self)._pprint_params()
        params.update({'u_range': self.u_range})
        return params

    def _param_speed(self, u):
        u = np.asarray(u, dtype=float)
        if self.param_derivative is not None:
            return norm(self.param_derivative(u))
        deriv = finite_difference(self.param_func, u, 1,
                                  1e-4 * (1 + np.abs(u)), points=7)
        return norm(deriv)

    def _length(self, a, b):
        value, _ = quad(lambda u: float(self._param_speed(u)), a, b,
                        epsabs=1e-13, epsrel=1e-13, limit=200)
        return value

    def param_at(self, s):
        """Parameter u at arc length s (scalar or array)"""
        s = np.asarray(s, dtype=float)
        out = np.empty(s.shape)
        for idx, target in np.ndenumerate(s):
            k = int(np.clip(np.searchsorted(self.cumulative, target) - 1, 0,
                            self.knots.size - 2))
            a, b = self.knots[k], self.knots[k + 1]
            base = self.cumulative[k]
            if target <= base:
                out[idx] = a
                continue
            if target >= self.cumulative[k + 1]:
                out[idx] = b
                continue
            out[idx] = brentq(lambda u: base + self._length(a, u) - target,
                              a, b, xtol=1e-15, rtol=1e-15)
        return out

    def _position(self, s):
        return np.asarray(self.param_func(self.param_at(s)), dtype=float)
