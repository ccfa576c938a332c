"""`Tolerances`"""
import logging
from os import environ

from .base import Frozen, PrettyPrint
from .constants import (DEFAULT_TOLERANCES, EPS_KAPPA, EPS_SLOPE,
                        TOL_ENV_VAR)

logger = logging.getLogger(__name__)

#: Backend tags that use the looser ``*_sampled`` tolerances.
_SAMPLED_BACKENDS = ('finite-difference', 'sampled')


class Tolerances(Frozen, PrettyPrint):
    """Tolerance record shared by all checks

    Holds every numerical tolerance the library uses. Defaults are listed in
    ``get_default_params``; any of them can be overwritten by keyword.
    A global ``scale`` multiplies all tolerances except the two definitional
    floors ``eps_kappa`` and ``eps_slope``.

    .. versionadded:: 0.1

    Parameters
    ----------
    scale : float, optional
        Positive factor applied to every tolerance
    **params : optional keyword arguments
        Individual tolerances, must be listed in ``get_default_params``

    Examples
    --------
    >>> from rshelix.utils import Tolerances
    >>> Tolerances(sigma=1e-7).sigma
    1e-07
    >>> Tolerances(scale=10).cone
    1e-09

    """

    def __init__(self, scale=1.0, **params):
        scale = float(scale)
        if not scale > 0:
            raise ValueError(f'"scale" must be a positive real, not {scale}.')
        defaults = self.get_default_params()
        for key in params:
            if key not in defaults:
                raise AttributeError(f"'{key}' is not a valid tolerance. "
                                     f"Choose from: "
                                     f"{', '.join(defaults.keys())}.")
        values = {**defaults, **params}
        for key, val in values.items():
            val = float(val)
            if key not in ('eps_kappa', 'eps_slope'):
                val *= scale
            setattr(self, key, val)
        self.scale = scale
        self._freeze()

    @staticmethod
    def get_default_params():
        """Return a dict of all tolerances and their default values"""
        params = {'eps_kappa': EPS_KAPPA, 'eps_slope': EPS_SLOPE}
        params.update(DEFAULT_TOLERANCES)
        return params

    def _pprint_params(self):
        params = {key: getattr(self, key)
                  for key in self.get_default_params()}
        params['scale'] = self.scale
        return params

    @classmethod
    def from_env(cls, **params):
        """Build a tolerance record scaled by the ``RSH_TOL`` variable

        ``RSH_TOL`` must be a positive real; if it is not set the scale is 1.

        Parameters
        ----------
        **params : optional keyword arguments
            Individual tolerances, passed on to the constructor
        """
        raw = environ.get(TOL_ENV_VAR, '1')
        try:
            scale = float(raw)
        except ValueError:
            raise ValueError(f'{TOL_ENV_VAR} must be a positive real, not '
                             f'"{raw}".')
        if not scale > 0:
            raise ValueError(f'{TOL_ENV_VAR} must be a positive real, not '
                             f'"{raw}".')
        if scale != 1:
            logger.debug(f'Scaling all tolerances by {TOL_ENV_VAR}={scale}')
        return cls(scale=scale, **params)

    def for_backend(self, name, backend):
        """Look up tolerance ``name`` appropriate for a curve backend

        Parameters
        ----------
        name : str
            Tolerance name without suffix, e.g. 'sigma'
        backend : {'closed-form', 'finite-difference', 'sampled'}
            Backend tag of the data being checked
        """
        if backend in _SAMPLED_BACKENDS and hasattr(self, f'{name}_sampled'):
            return getattr(self, f'{name}_sampled')
        return getattr(self, name)
