"""`RectifyingSlantHelix`, `make_rs_helix`, `family_evaluate`,
   `closed_form_kappa_tau`, `general_kappa_tau`, `c3_from_sigma`,
   `closed_form_normal`, `axis_components`, `rectifying_components`,
   `position_norm`, `ode_coefficient`, `cone_of`, `cone_residual`"""
import logging
from functools import lru_cache

import numpy as np
from numpy.polynomial import Polynomial

from ..curves.base import ClosedFormCurve
from ..utils.base import InvalidParams
from ..utils.constants import DEFAULT_DOMAIN
from ..utils.geometry import vec3
from .params import AxisComponents, ConeParams, FamilyEvaluation, FamilyParams

logger = logging.getLogger(__name__)

#: Sign relating the Frenet normal alpha''/kappa of the generated curve to the
#: closed-form normal (sin cos h, sin sin h, cos). Fixed by canonical params.
NORMAL_SIGN = 1

#: Branch of lambda3 = AXIS_SIGN sin(theta) / sqrt(1 + f²); lambda1 takes the
#: same sign so that g(t, u) = f g(b, u).
AXIS_SIGN = 1


def _check_params(params):
    if not isinstance(params, FamilyParams):
        raise InvalidParams(f'Expected FamilyParams, not {type(params)}.')
    return params


@lru_cache(maxsize=None)
def _derivative_polynomial(m, order):
    """Numerator of the order-th f-derivative of F = sqrt(1+f²) e^{ih}

    With h = m arctan(f),

        F^(n) = c_n P_n(f) (1 + f²)^(1/2 - n) e^{ih},

    where c_n = 1 for n < 2 and c_n = 1 - m² otherwise. Every P_n follows
    P_{n+1} = (1 + f²) P_n' + ((1 - 2n) f + i m) P_n, starting from
    P_0 = 1, P_1 = f + i m and P_2 = 1. The factor 1 - m² is left to the
    caller, which knows it exactly.
    """
    if order == 0:
        return Polynomial([1.0 + 0j])
    if order == 1:
        return Polynomial([1j * m, 1.0])
    one_plus_sq = Polynomial([1.0, 0.0, 1.0])
    poly = Polynomial([1.0 + 0j])
    for n in range(2, order):
        poly = (one_plus_sq * poly.deriv() +
                Polynomial([1j * m, 1.0 - 2 * n]) * poly)
    return poly


def _power_derivative(f, c1, m, order, factor=1.0):
    """order-th s-derivative of sqrt(1 + f²) exp(i m arctan f), f = c1 s + c2

    ``factor`` must equal 1 - m²; it multiplies orders two and up.
    """
    poly = _derivative_polynomial(float(m), int(order))
    scale = c1 ** order * (factor if order >= 2 else 1.0)
    out = scale * poly(f) * (1 + f ** 2) ** (0.5 - order)
    if m != 0:
        out = out * np.exp(1j * m * np.arctan(f))
    return out


class RectifyingSlantHelix(ClosedFormCurve):
    """Unit-speed rectifying slant helix on the cone tan²θ (x²+y²) = z²

    .. math::

        \\alpha(s) = -\\frac{\\sqrt{1 + f^2}}{c_1}
        (\\cos\\theta \\cos h, \\cos\\theta \\sin h, -\\sin\\theta),

    with f = c1 s + c2 and h = sec(theta) arctan(f). Writing
    x + iy = -(cos(theta)/c1) sqrt(1 + f²) e^{ih}, every derivative is a
    polynomial in f times a power of 1 + f² and e^{ih}. From the second
    order on the planar part carries the factor 1 - sec²(theta), applied
    exactly as -tan²(theta).

    .. versionadded:: 0.1

    Parameters
    ----------
    params : :py:class:`~rshelix.family.FamilyParams`
        Family member
    domain : (s_min, s_max), optional
        Arc-length interval

    """

    def __init__(self, params, domain=DEFAULT_DOMAIN):
        self.params = _check_params(params)
        super(RectifyingSlantHelix, self).__init__(domain=domain)
        self._freeze()

    def _pprint_params(self):
        params = super(RectifyingSlantHelix, self)._pprint_params()
        params.update({'params': self.params})
        return params

    def _evaluate(self, s, order):
        prm = self.params
        f = prm.f(s)
        planar = (-prm.cos_theta / prm.c1 *
                  _power_derivative(f, prm.c1, prm.sec_theta, order,
                                    factor=-prm.tan_theta ** 2))
        # m = 0 reduces the power to sqrt(1 + f²):
        z = (prm.sin_theta / prm.c1 *
             _power_derivative(f, prm.c1, 0.0, order).real)
        return np.stack((planar.real, planar.imag, z), axis=-1)


def make_rs_helix(params, domain=DEFAULT_DOMAIN):
    """Closed-form rectifying slant helix of a family member

    .. versionadded:: 0.1

    Parameters
    ----------
    params : :py:class:`~rshelix.family.FamilyParams`
        Family member
    domain : (s_min, s_max), optional
        Arc-length interval, [-10, 10] by default

    Returns
    -------
    curve : :py:class:`~rshelix.family.RectifyingSlantHelix`

    Examples
    --------
    >>> from rshelix.family import FamilyParams, make_rs_helix
    >>> curve = make_rs_helix(FamilyParams.from_cos_theta(1, 0, 1 / 3))
    >>> curve(0.0)  # doctest: +SKIP
    array([-0.33333333,  0.        ,  0.94280904])

    """
    return RectifyingSlantHelix(params, domain=domain)


def family_evaluate(params, s):
    """f, h, kappa and tau of a family member

    .. versionadded:: 0.1

    """
    kappa, tau = closed_form_kappa_tau(params, s)
    return FamilyEvaluation(s, params.f(s), params.h(s), kappa, tau)


def closed_form_kappa_tau(params, s):
    """Curvature and torsion laws of the family

    kappa = |c1 tan(theta)| / (1 + f²)^(3/2) and tau = kappa f.

    .. versionadded:: 0.1

    Returns
    -------
    kappa, tau : np.ndarray
    """
    return general_kappa_tau(_check_params(params), s, c3=params.c3)


def general_kappa_tau(params, s, c3):
    """Curvature and torsion of a rectifying slant helix with constant c3

    Every rectifying slant helix has kappa = c3 / (1 + f²)^(3/2) and
    tau = c3 f / (1 + f²)^(3/2) for some c3 > 0, see
    :py:func:`c3_from_sigma`; the family member has c3 = |c1 tan(theta)|.

    .. versionadded:: 0.1

    """
    _check_params(params)
    if not c3 > 0:
        raise InvalidParams(f'"c3" must be positive, not {c3}.')
    f = params.f(s)
    kappa = c3 / (1 + f ** 2) ** 1.5
    return kappa, kappa * f


def c3_from_sigma(c1, sigma):
    """c3 = |c1 / m| for tau/kappa slope c1 and sigma constant m"""
    if sigma == 0:
        raise InvalidParams('A constant sigma of 0 admits no c3.')
    return abs(c1 / sigma)


def closed_form_normal(params, s):
    """Principal normal (sin θ cos h, sin θ sin h, cos θ) of a family member

    .. versionadded:: 0.1

    Returns
    -------
    n : np.ndarray
        Shape ``np.shape(s) + (3,)``
    """
    params = _check_params(params)
    h = params.h(s)
    sin = params.sin_theta
    return NORMAL_SIGN * vec3(sin * np.cos(h), sin * np.sin(h),
                              np.full(np.shape(h), params.cos_theta))


def axis_components(params, s):
    """Coordinates of the cone axis (0, 0, 1) in the Frenet frame

    lambda1 = f sin(theta) / sqrt(1 + f²), lambda2 = cos(theta) and
    lambda3 = sin(theta) / sqrt(1 + f²).

    .. versionadded:: 0.1

    """
    params = _check_params(params)
    f = params.f(s)
    root = np.sqrt(1 + f ** 2)
    sin = params.sin_theta
    return AxisComponents(AXIS_SIGN * f * sin / root, params.cos_theta,
                          AXIS_SIGN * sin / root)


def rectifying_components(params, s):
    """Coefficients of alpha = lambda t + mu b: (s + c2/c1, 1/c1)

    .. versionadded:: 0.1

    """
    params = _check_params(params)
    s = np.asarray(s, dtype=float)
    return s + params.c2 / params.c1, np.full(s.shape, 1.0 / params.c1)


def position_norm(params, s):
    """|alpha(s)| = sqrt(1 + f²) / |c1|"""
    params = _check_params(params)
    return np.sqrt(1 + params.f(s) ** 2) / abs(params.c1)


def ode_coefficient(params, s):
    """(c1 tan(theta))² / (1 + f²)², the ODE coefficient for n'/kappa"""
    params = _check_params(params)
    return params.c3 ** 2 / (1 + params.f(s) ** 2) ** 2


def cone_of(params):
    """Cone tan²(theta) (x² + y²) = z² carrying the family member

    .. versionadded:: 0.1

    """
    return ConeParams(_check_params(params).slope_sq)


def cone_residual(p, cone):
    """slope_sq (x² + y²) - z²; zero on the cone

    .. versionadded:: 0.1

    Parameters
    ----------
    p : array-like
        Point(s), shape (..., 3)
    cone : :py:class:`~rshelix.family.ConeParams`
    """
    p = np.asarray(p, dtype=float)
    return cone.slope_sq * (p[..., 0] ** 2 + p[..., 1] ** 2) - p[..., 2] ** 2
