"""`stencil_weights`, `finite_difference`, `sampled_derivative`,
   `stable_estimate`, `adaptive_difference`"""
import logging
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.ndimage import maximum_filter1d

from ..utils.base import InsufficientSamples, StencilOutOfDomain

logger = logging.getLogger(__name__)

#: Highest derivative order offered by the finite-difference backend.
MAX_FD_ORDER = 4


def _validate_stencil(order, points):
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise TypeError(f'"order" must be an integer, not {type(order)}.')
    if not isinstance(points, (int, np.integer)) or isinstance(points, bool):
        raise TypeError(f'"points" must be an integer, not {type(points)}.')
    if order < 1 or order > MAX_FD_ORDER:
        raise ValueError(f'"order" must be between 1 and {MAX_FD_ORDER}, not '
                         f'{order}.')
    if points < 3 or points % 2 == 0:
        raise ValueError(f'"points" must be an odd integer >= 3, not '
                         f'{points}.')
    if points < order + 1:
        raise ValueError(f'A central stencil for order {order} needs at least '
                         f'{order + 1 + order % 2} points, not {points}.')


@lru_cache(maxsize=None)
def _fornberg(order, points):
    # Fornberg's recursion on the integer offsets -points//2 ... points//2,
    # carried out in exact rational arithmetic.
    offsets = [Fraction(k) for k in range(-(points // 2), points // 2 + 1)]
    c = [[Fraction(0)] * (order + 1) for _ in offsets]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    c4 = offsets[0]
    for i in range(1, points):
        mn = min(i, order)
        c2 = Fraction(1)
        c5 = c4
        c4 = offsets[i]
        for j in range(i):
            c3 = offsets[i] - offsets[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i][k] = (c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k])
                               / c2)
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for k in range(mn, 0, -1):
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return tuple(row[order] for row in c)


def stencil_weights(order, points=5):
    """Weights of the central finite-difference stencil

    Returns the weights :math:`w_k` such that
    :math:`f^{(order)}(s) \\approx \\sum_k w_k f(s + k h) / h^{order}` for
    the integer offsets :math:`k = -p, \\ldots, p` with ``points = 2p + 1``.
    The weights are computed exactly as rationals, so they sum to zero.

    .. versionadded:: 0.1

    Parameters
    ----------
    order : int
        Derivative order, 1 through 4
    points : int, optional
        Odd number of stencil points

    Returns
    -------
    weights : np.ndarray
        Read-only array of length ``points``

    Examples
    --------
    >>> from rshelix.curves import stencil_weights
    >>> stencil_weights(1, 3)
    array([-0.5,  0. ,  0.5])

    """
    _validate_stencil(order, points)
    weights = np.array([float(w) for w in _fornberg(int(order), int(points))])
    weights.setflags(write=False)
    return weights


def finite_difference(func, s, order, step, points=5, support=None):
    """Central finite-difference estimate of a derivative

    Evaluates ``func`` on the stencil nodes ``s + k * step`` and combines the
    values with :py:func:`stencil_weights`. With the default 5-point stencil
    the truncation error is O(step⁴) for orders 1-2 and O(step²) for
    orders 3-4.

    .. versionadded:: 0.1

    Parameters
    ----------
    func : callable
        Vectorized function: given an array of parameter values of any shape,
        returns an array of that shape plus trailing value dimensions
        (e.g. a curve evaluator returning shape ``s.shape + (3,)``).
    s : float or array-like
        Where to differentiate
    order : int
        Derivative order, 1 through 4
    step : float or array-like
        Positive step size, broadcast against ``s``
    points : int, optional
        Odd number of stencil points
    support : (lo, hi), optional
        Interval on which ``func`` may be evaluated. If given, a stencil node
        outside it raises :py:class:`~rshelix.utils.StencilOutOfDomain`.

    Returns
    -------
    deriv : np.ndarray
        Array of shape ``s.shape`` plus the trailing value dimensions
    """
    weights = stencil_weights(order, points)
    s = np.asarray(s, dtype=float)
    step = np.broadcast_to(np.asarray(step, dtype=float), s.shape)
    if not np.all(step > 0):
        raise ValueError(f'"step" must be positive, not {step}.')
    half = points // 2
    offsets = np.arange(-half, half + 1, dtype=float)
    nodes = s[None, ...] + offsets.reshape((-1,) + (1,) * s.ndim) * step
    if support is not None:
        lo, hi = support
        if np.any(nodes < lo) or np.any(nodes > hi):
            raise StencilOutOfDomain(f'The {points}-point stencil around '
                                     f's={s} with step {step} leaves the '
                                     f'support [{lo}, {hi}].')
    values = np.asarray(func(nodes), dtype=float)
    # Differencing against the center keeps rounding out of the weight sum:
    diffs = values - values[half]
    deriv = np.tensordot(weights, diffs, axes=(0, 0))
    scale = step ** order
    return deriv / scale.reshape(scale.shape + (1,) * (deriv.ndim - s.ndim))


def sampled_derivative(values, step, order, points=5, stride=1):
    """Central finite differences along the first axis of uniform samples

    Applies the central stencil to rows spaced ``stride`` samples apart, so
    the effective step is ``stride * step``. Only rows where the whole
    stencil fits are returned.

    .. versionadded:: 0.1

    Parameters
    ----------
    values : array-like
        Samples, shape (n, ...), uniformly spaced along the first axis
    step : float
        Spacing of the samples
    order : int
        Derivative order, 1 through 4
    points : int, optional
        Odd number of stencil points
    stride : int, optional
        Number of samples between stencil nodes

    Returns
    -------
    deriv : np.ndarray
        Derivative estimates for rows ``half * stride`` through
        ``n - half * stride - 1``, where ``half = points // 2``
    """
    weights = stencil_weights(order, points)
    values = np.asarray(values, dtype=float)
    if step <= 0:
        raise ValueError(f'"step" must be positive, not {step}.')
    if stride < 1:
        raise ValueError(f'"stride" must be a positive integer, not {stride}.')
    half = points // 2
    n_rows = values.shape[0] - 2 * half * stride
    if n_rows < 1:
        raise InsufficientSamples(f'A {points}-point stencil with stride '
                                  f'{stride} needs at least '
                                  f'{2 * half * stride + 1} samples, not '
                                  f'{values.shape[0]}.')
    center = values[half * stride:half * stride + n_rows]
    deriv = np.zeros_like(center)
    for k, w in zip(range(-half, half + 1), weights):
        if w == 0:
            continue
        start = (half + k) * stride
        deriv += w * (values[start:start + n_rows] - center)
    return deriv / (stride * step) ** order


def stable_estimate(estimates, value_ndim=0, spread=0):
    """Pick, point by point, the most stable entry of a ladder of estimates

    Level ``j`` of the ladder is scored by the larger of its distances to
    the estimates of levels ``j - 1`` and ``j + 1`` (the end levels only
    have one neighbour). On a ladder of halving steps the score is large
    where truncation dominates (coarse steps) and where rounding dominates
    (fine steps); the level with the smallest score is returned. NaN marks
    an unavailable estimate and never wins.

    .. versionadded:: 0.1

    Parameters
    ----------
    estimates : array-like
        Shape ``(levels,) + point_shape + value_shape``
    value_ndim : int, optional
        Number of trailing dimensions that form one value; distances between
        vector values are Euclidean
    spread : int, optional
        If positive, each score is replaced by the maximum over ``spread``
        neighbours on either side along the first point axis, which keeps
        the choice from flickering between adjacent samples

    Returns
    -------
    value : np.ndarray
        Selected estimates, shape ``point_shape + value_shape``
    error : np.ndarray
        Score of the selected level (inf where no level is usable)
    best : np.ndarray
        Index of the selected level, shape ``point_shape``
    """
    estimates = np.asarray(estimates, dtype=float)
    n_levels = estimates.shape[0]
    point_shape = estimates.shape[1:estimates.ndim - value_ndim]
    if n_levels < 2:
        return (estimates[0], np.full(point_shape, np.inf),
                np.zeros(point_shape, dtype=int))
    diffs = np.diff(estimates, axis=0)
    if value_ndim:
        value_axes = tuple(range(diffs.ndim - value_ndim, diffs.ndim))
        diffs = np.sqrt(np.sum(diffs ** 2, axis=value_axes))
    else:
        diffs = np.abs(diffs)
    pad = np.full((1,) + point_shape, np.nan)
    score = np.fmax(np.concatenate((pad, diffs)),
                    np.concatenate((diffs, pad)))
    score[np.isnan(score)] = np.inf
    if spread > 0 and score.ndim > 1:
        score = maximum_filter1d(score, size=2 * int(spread) + 1, axis=1,
                                 mode='nearest')
    best = np.argmin(score, axis=0)
    index = best.reshape((1,) + point_shape + (1,) * value_ndim)
    value = np.take_along_axis(estimates, index, axis=0)[0]
    error = np.take_along_axis(score, best[None], axis=0)[0]
    return value, error, best


def adaptive_difference(func, s, order, top, points=9, levels=12,
                        support=None, strict=True):
    """Central finite difference with the step picked per point

    Builds the estimates of :py:func:`finite_difference` for the steps
    ``top, top / 2, ..., top / 2**(levels - 1)`` and keeps, at every point,
    the one :py:func:`stable_estimate` finds most stable. Levels whose
    stencil leaves ``support`` are skipped.

    .. versionadded:: 0.1

    Parameters
    ----------
    func : callable
        Vectorized function as for :py:func:`finite_difference`
    s : float or array-like
        Where to differentiate
    order : int
        Derivative order, 1 through 4
    top : float or array-like
        Largest step, broadcast against ``s``
    points : int, optional
        Odd number of stencil points
    levels : int, optional
        Number of step halvings tried
    support : (lo, hi), optional
        Interval on which ``func`` may be evaluated
    strict : bool, optional
        If True, a point where no level fits inside ``support`` raises
        :py:class:`~rshelix.utils.StencilOutOfDomain`; otherwise its
        estimate is NaN

    Returns
    -------
    deriv : np.ndarray
        Array of shape ``s.shape`` plus the trailing value dimensions
    error : np.ndarray
        Stability score of each estimate, shape ``s.shape``
    """
    weights = stencil_weights(order, points)
    s = np.asarray(s, dtype=float)
    top = np.broadcast_to(np.asarray(top, dtype=float), s.shape)
    if not np.all(top > 0):
        raise ValueError(f'"top" must be positive, not {top}.')
    if levels < 1:
        raise ValueError(f'"levels" must be a positive integer, not '
                         f'{levels}.')
    half = points // 2
    steps = 0.5 ** np.arange(levels).reshape((-1,) + (1,) * s.ndim) * top
    offsets = np.arange(-half, half + 1, dtype=float)
    nodes = (s[None, None, ...] +
             offsets.reshape((1, -1) + (1,) * s.ndim) * steps[:, None, ...])
    fits = np.ones(steps.shape, dtype=bool)
    if support is not None:
        lo, hi = support
        fits = (s - half * steps >= lo) & (s + half * steps <= hi)
        usable = np.any(fits, axis=0)
        if not np.all(usable):
            if strict:
                raise StencilOutOfDomain(f'No {points}-point stencil around '
                                         f's={s[~usable]} fits inside the '
                                         f'support [{lo}, {hi}].')
            logger.debug(f'{np.count_nonzero(~usable)} points have no '
                         f'stencil inside [{lo}, {hi}].')
        nodes = np.clip(nodes, lo, hi)
    values = np.asarray(func(nodes), dtype=float)
    # Differencing against the center keeps rounding out of the weight sum:
    diffs = values - values[:, half:half + 1]
    deriv = np.tensordot(weights, diffs, axes=(0, 1))
    value_ndim = deriv.ndim - 1 - s.ndim
    deriv = deriv / (steps ** order).reshape(steps.shape + (1,) * value_ndim)
    deriv[~fits] = np.nan
    value, error, _ = stable_estimate(deriv, value_ndim=value_ndim)
    return value, error
