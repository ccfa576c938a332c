"""`SphericalTrace`, `indicatrix`, `latitude_check`, `implied_angle`"""
import logging

import numpy as np

from ..curves.frenet import frenet_at
from ..utils.base import (Frozen, PrettyPrint, freeze_array, EmptyTrace,
                          MalformedInput)
from ..utils.constants import DEFAULT_GRID_SIZE
from ..utils.geometry import dot, norm
from ..utils.stats import max_deviation

logger = logging.getLogger(__name__)

#: Frame vectors that have a spherical indicatrix.
INDICATRICES = ('tangent', 'normal', 'binormal')

# Largest | |p| - 1 | accepted for a point of a spherical trace.
_UNIT_ATOL = 1e-9


class SphericalTrace(Frozen, PrettyPrint):
    """Image of a frame vector on the unit sphere

    The trace is parametrized by the arc length ``s`` of the base curve.

    .. versionadded:: 0.1

    Parameters
    ----------
    s : array-like
        Arc-length values of the base curve, shape (n,)
    points : array-like
        Unit vectors, shape (n, 3)
    which : {'tangent', 'normal', 'binormal'}
        Frame vector the trace belongs to

    """

    def __init__(self, s, points, which):
        if which not in INDICATRICES:
            raise ValueError(f'"which" must be one of {INDICATRICES}, not '
                             f'"{which}".')
        s = np.asarray(s, dtype=float).reshape(-1)
        points = np.asarray(points, dtype=float).reshape(-1, 3)
        if points.shape[0] != s.size:
            raise MalformedInput(f'{s.size} parameter values but '
                                 f'{points.shape[0]} points.')
        if points.size > 0:
            off = np.max(np.abs(norm(points) - 1))
            if off > _UNIT_ATOL:
                raise MalformedInput(f'Trace points must be unit vectors, '
                                     f'found | |p| - 1 | = {off:.3g}.')
        self.s = freeze_array(s)
        self.points = freeze_array(points)
        self.which = which
        self._freeze()

    def _pprint_params(self):
        return {'s': self.s, 'which': self.which}

    def __len__(self):
        return self.s.size


def indicatrix(curve, which='normal', grid=None, n=DEFAULT_GRID_SIZE,
               tolerances=None):
    """Tangent, normal or binormal indicatrix of a curve

    .. versionadded:: 0.1

    Parameters
    ----------
    curve : :py:class:`~rshelix.curves.Curve`
        The base curve
    which : {'tangent', 'normal', 'binormal'}, optional
        Frame vector to trace
    grid : array-like, optional
        Arc-length values; defaults to ``n`` uniform points over the domain
    n : int, optional
        Grid size when ``grid`` is not given
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    trace : :py:class:`~rshelix.indicatrix.SphericalTrace`

    Raises
    ------
    CurvatureVanishes
        If the frame is undefined at a grid point
    """
    if which not in INDICATRICES:
        raise ValueError(f'"which" must be one of {INDICATRICES}, not '
                         f'"{which}".')
    if grid is None:
        grid = curve.grid(n)
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    frenet = frenet_at(curve, grid, tolerances=tolerances, with_sigma=False)
    points = {'tangent': frenet.t, 'normal': frenet.n,
              'binormal': frenet.b}[which]
    # Unit-speed curves from a finite-difference oracle are unit only to
    # the oracle's accuracy:
    points = points / norm(points)[:, None]
    logger.debug(f'{which} indicatrix over {grid.size} points')
    return SphericalTrace(grid, points, which)


def latitude_check(trace, axis=(0, 0, 1)):
    """Mean and spread of cos(angle) between the trace and an axis

    A trace on a circle of latitude about ``axis`` has ``max_dev = 0``; the
    normal indicatrix of a slant helix is such a circle.

    .. versionadded:: 0.1

    Parameters
    ----------
    trace : :py:class:`~rshelix.indicatrix.SphericalTrace`
        Non-empty trace
    axis : array-like, optional
        Unit axis

    Returns
    -------
    mean_cos, max_dev : float
        Mean of dot(p, axis) and the largest deviation from it

    Raises
    ------
    EmptyTrace
        If the trace has no points
    """
    if len(trace) == 0:
        raise EmptyTrace(f'The {trace.which} trace has no points.')
    axis = np.asarray(axis, dtype=float)
    if axis.shape != (3,) or abs(norm(axis) - 1) > _UNIT_ATOL:
        raise ValueError(f'"axis" must be a unit 3-vector, not {axis}.')
    return max_deviation(dot(trace.points, axis))


def implied_angle(trace, axis=(0, 0, 1)):
    """Angle between the trace and ``axis`` implied by the mean cosine"""
    mean_cos, _ = latitude_check(trace, axis=axis)
    return float(np.arccos(np.clip(mean_cos, -1, 1)))
