"""`FamilyParams`, `ConeParams`, `AxisComponents`, `FamilyEvaluation`"""
import logging

import numpy as np

from ..utils.base import Frozen, PrettyPrint, InvalidParams, freeze_array

logger = logging.getLogger(__name__)

# Angles closer than this (in sin 2 theta) to a multiple of pi/2 are rejected.
_ANGLE_EPS = 1e-12


def _real(value, name):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidParams(f'"{name}" must be a real number, not {value}.')
    if not np.isfinite(value):
        raise InvalidParams(f'"{name}" must be finite, not {value}.')
    return value


class FamilyParams(Frozen, PrettyPrint):
    """Parameters of one rectifying slant helix on a cone

    The family member is determined by ``c1 != 0``, ``c2`` and the cone angle
    ``theta``; its tau/kappa is ``f(s) = c1 s + c2`` and its principal normal
    makes the angle ``theta`` with the z axis.

    cos(theta) fixes theta only up to sign, and theta and -theta describe the
    same cone. The sign of ``theta`` is therefore chosen so that
    ``c1 tan(theta) > 0``; on that branch the torsion is
    ``+|c1 tan(theta)| f / (1 + f²)^(3/2)`` and the Frenet normal equals
    ``(sin(theta) cos h, sin(theta) sin h, cos(theta))``.

    .. versionadded:: 0.1

    Parameters
    ----------
    c1 : float
        Nonzero slope of tau/kappa
    c2 : float
        Intercept of tau/kappa
    theta : float
        Cone angle in radians, not a multiple of pi/2

    Raises
    ------
    InvalidParams
        If ``c1 = 0`` or ``theta`` is a multiple of pi/2 (where tan(theta) is
        zero or infinite)

    """

    def __init__(self, c1, c2, theta):
        c1 = _real(c1, 'c1')
        c2 = _real(c2, 'c2')
        theta = _real(theta, 'theta')
        if c1 == 0:
            raise InvalidParams('"c1" must be nonzero: tau/kappa = c1 s + c2 '
                                'with c1 = 0 is not a rectifying curve.')
        if abs(np.sin(2 * theta)) < _ANGLE_EPS:
            raise InvalidParams(f'theta={theta} violates the exclusion theta '
                                f'!= k pi/2: tan(theta) must be finite and '
                                f'nonzero.')
        if c1 * np.tan(theta) < 0:
            logger.debug(f'Flipping theta={theta} to {-theta} so that '
                         f'c1 tan(theta) > 0.')
            theta = -theta
        self.c1 = c1
        self.c2 = c2
        self.theta = theta
        self._freeze()

    @classmethod
    def from_cos_theta(cls, c1, c2, cos_theta):
        """Build parameters from cos(theta), as used on the command line"""
        cos_theta = _real(cos_theta, 'cos_theta')
        if abs(cos_theta) > 1:
            raise InvalidParams(f'"cos_theta" must lie in [-1, 1], not '
                                f'{cos_theta}.')
        return cls(c1, c2, np.arccos(cos_theta))

    @classmethod
    def from_degrees(cls, c1, c2, theta_deg):
        """Build parameters from an angle in degrees"""
        return cls(c1, c2, np.deg2rad(_real(theta_deg, 'theta_deg')))

    def _pprint_params(self):
        return {'c1': self.c1, 'c2': self.c2, 'theta': self.theta}

    def to_dict(self):
        return {'c1': self.c1, 'c2': self.c2, 'theta': self.theta,
                'cos_theta': self.cos_theta}

    @property
    def cos_theta(self):
        return float(np.cos(self.theta))

    @property
    def sin_theta(self):
        return float(np.sin(self.theta))

    @property
    def tan_theta(self):
        return float(np.tan(self.theta))

    @property
    def sec_theta(self):
        """m = sec(theta), the winding rate of h = m arctan(f)"""
        return 1.0 / self.cos_theta

    @property
    def c3(self):
        """|c1 tan(theta)|, the constant of the curvature law"""
        return abs(self.c1 * self.tan_theta)

    @property
    def sigma(self):
        """Slant-helix invariant of the family member, cot(theta)"""
        return 1.0 / self.tan_theta

    @property
    def slope_sq(self):
        return self.tan_theta ** 2

    def f(self, s):
        """tau/kappa = c1 s + c2"""
        return self.c1 * np.asarray(s, dtype=float) + self.c2

    def h(self, s):
        """Azimuth of the principal normal, sec(theta) arctan(f(s))"""
        return self.sec_theta * np.arctan(self.f(s))

    @property
    def zero_torsion_at(self):
        """Arc length -c2/c1 where the torsion changes sign"""
        return -self.c2 / self.c1


class ConeParams(Frozen, PrettyPrint):
    """Circular cone ``slope_sq (x² + y²) - z² = 0`` with apex at the origin

    .. versionadded:: 0.1

    """

    def __init__(self, slope_sq):
        slope_sq = float(slope_sq)
        if not slope_sq > 0 or not np.isfinite(slope_sq):
            raise InvalidParams(f'"slope_sq" must be a positive real, not '
                                f'{slope_sq}.')
        self.slope_sq = slope_sq
        self._freeze()

    def _pprint_params(self):
        return {'slope_sq': self.slope_sq}

    @property
    def slope(self):
        """|dz/dr| of the cone generators"""
        return float(np.sqrt(self.slope_sq))


class AxisComponents(Frozen, PrettyPrint):
    """Coordinates of the fixed axis u in the moving frame {t, n, b}

    u = lambda1 t + lambda2 n + lambda3 b.

    .. versionadded:: 0.1

    """

    def __init__(self, lambda1, lambda2, lambda3):
        self.lambda1 = freeze_array(lambda1)
        self.lambda2 = freeze_array(np.broadcast_to(lambda2,
                                                    self.lambda1.shape))
        self.lambda3 = freeze_array(lambda3)
        self._freeze()

    def _pprint_params(self):
        return {'lambda1': self.lambda1, 'lambda2': self.lambda2,
                'lambda3': self.lambda3}

    def norm_sq(self):
        return self.lambda1 ** 2 + self.lambda2 ** 2 + self.lambda3 ** 2

    def reconstruct(self, t, n, b):
        """The axis lambda1 t + lambda2 n + lambda3 b from a frame"""
        return (self.lambda1[..., None] * np.asarray(t) +
                self.lambda2[..., None] * np.asarray(n) +
                self.lambda3[..., None] * np.asarray(b))


class FamilyEvaluation(Frozen, PrettyPrint):
    """f, h, kappa and tau of a family member at one or more points

    .. versionadded:: 0.1

    """

    def __init__(self, s, f_value, h_value, kappa, tau):
        self.s = freeze_array(s)
        self.f_value = freeze_array(f_value)
        self.h_value = freeze_array(h_value)
        self.kappa = freeze_array(kappa)
        self.tau = freeze_array(tau)
        self._freeze()

    def _pprint_params(self):
        return {'s': self.s, 'f_value': self.f_value, 'h_value': self.h_value,
                'kappa': self.kappa, 'tau': self.tau}
