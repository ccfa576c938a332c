"""`CurveSamples`, `sample_curve`, `frenet_samples`"""
import logging

import numpy as np

from ..utils.array import uniform_step
from ..utils.base import (Frozen, PrettyPrint, freeze_array,
                          CurvatureVanishes, InsufficientSamples,
                          MalformedInput)
from ..utils.constants import (DEFAULT_GRID_SIZE, SAMPLED_POINTS,
                               SAMPLED_RESOLUTION, SAMPLED_KEEP_FRACTION)
from ..utils.geometry import cross, norm, triple
from ..utils.tolerances import Tolerances
from .finite_difference import (sampled_derivative, stable_estimate,
                                stencil_weights)
from .frenet import FrenetApparatus, frenet_at, sigma_from

logger = logging.getLogger(__name__)

#: Fewest rows a sampled curve needs: one 5-point stencil plus two
#: neighbours for the tau/kappa derivative.
MIN_SAMPLES = 7


class CurveSamples(Frozen, PrettyPrint):
    """Ordered arc-length samples of a curve

    .. versionadded:: 0.1

    Parameters
    ----------
    s : array-like
        Strictly increasing arc-length values, shape (n,)
    points : array-like
        Positions, shape (n, 3)
    frenet : :py:class:`~rshelix.curves.FrenetApparatus`, optional
        Per-sample Frenet apparatus, one row per sample
    backend : str, optional
        Where the data come from: 'closed-form', 'finite-difference' or
        'sampled'
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional
        ``chord`` bounds the unit-speed consistency check

    Raises
    ------
    MalformedInput
        If ``s`` is not strictly increasing, the shapes disagree, or a chord
        is longer than its arc-length increment allows.

    """

    def __init__(self, s, points, frenet=None, backend='sampled',
                 tolerances=None):
        if tolerances is None:
            tolerances = Tolerances()
        s = np.asarray(s, dtype=float)
        points = np.asarray(points, dtype=float)
        if s.ndim != 1:
            raise MalformedInput(f'"s" must be 1-D, not shape {s.shape}.')
        if points.shape != s.shape + (3,):
            raise MalformedInput(f'"points" must have shape {s.shape + (3,)}, '
                                 f'not {points.shape}.')
        if not np.all(np.isfinite(s)) or not np.all(np.isfinite(points)):
            raise MalformedInput('Samples must be finite.')
        ds = np.diff(s)
        if np.any(ds <= 0):
            idx = int(np.argmax(ds <= 0))
            raise MalformedInput(f'"s" must be strictly increasing (row '
                                 f'{idx + 1}: {s[idx + 1]} after {s[idx]}).')
        chords = norm(np.diff(points, axis=0))
        excess = chords - ds * (1 + tolerances.chord)
        if np.any(excess > 0):
            idx = int(np.argmax(excess))
            raise MalformedInput(f'Chord {chords[idx]:.6g} between rows {idx} '
                                 f'and {idx + 1} exceeds the arc-length step '
                                 f'{ds[idx]:.6g}: samples are not unit '
                                 f'speed.')
        if frenet is not None and frenet.s.shape != s.shape:
            raise MalformedInput('"frenet" must have one row per sample.')
        self.s = freeze_array(s)
        self.points = freeze_array(points)
        self.frenet = frenet
        self.backend = backend
        self._freeze()

    def _pprint_params(self):
        return {'s': self.s, 'backend': self.backend,
                'frenet': self.frenet is not None}

    def __len__(self):
        return self.s.size

    def take(self, idx):
        """Samples restricted to rows ``idx`` (slice or index array)"""
        frenet = None if self.frenet is None else self.frenet.take(idx)
        return CurveSamples(self.s[idx], self.points[idx], frenet=frenet,
                            backend=self.backend)


def sample_curve(curve, grid=None, n=DEFAULT_GRID_SIZE, with_frenet=True,
                 tolerances=None):
    """Sample a curve (and its Frenet apparatus) on a grid

    .. versionadded:: 0.1

    Parameters
    ----------
    curve : :py:class:`~rshelix.curves.Curve`
        The curve
    grid : array-like, optional
        Arc-length values; defaults to ``n`` uniform points over the domain
    n : int, optional
        Grid size when ``grid`` is not given
    with_frenet : bool, optional
        Whether to attach the Frenet apparatus (including sigma)
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional
    """
    if grid is None:
        grid = curve.grid(n)
    grid = np.asarray(grid, dtype=float)
    frenet = None
    if with_frenet:
        frenet = frenet_at(curve, grid, tolerances=tolerances)
    return CurveSamples(grid, curve(grid, 0), frenet=frenet,
                        backend=curve.backend, tolerances=tolerances)



def _stride_ladder(values, step, order, points):
    """Stencil estimates for strides 1, 2, 4, ..., NaN where they don't fit"""
    n_rows = values.shape[0]
    half = points // 2
    ladder = []
    stride = 1
    while 2 * half * stride + 1 <= n_rows:
        level = np.full(values.shape, np.nan)
        deriv = sampled_derivative(values, step, order, points, stride=stride)
        level[half * stride:half * stride + deriv.shape[0]] = deriv
        ladder.append(level)
        stride *= 2
    return np.array(ladder)


def _ratio_rate(ratio, step):
    """(tau/kappa)' with its error estimate and the step it was taken with"""
    ladder = _stride_ladder(ratio, step, 1, 5)
    if ladder.size and np.any(np.isfinite(ladder)):
        rate, error, best = stable_estimate(ladder, spread=2)
        return rate, error, step * 2.0 ** best
    # Too few rows for a 5-point stencil on tau/kappa:
    finite = np.flatnonzero(np.isfinite(ratio))
    if finite.size < 3:
        raise InsufficientSamples(f'Need at least 3 frames to differentiate '
                                  f'tau/kappa, not {finite.size}.')
    lo, hi = finite[0], finite[-1] + 1
    rate = np.full(ratio.shape, np.nan)
    rate[lo:hi] = np.gradient(ratio[lo:hi], step, edge_order=2)
    return rate, np.full(ratio.shape, np.inf), np.full(ratio.shape, step)


def frenet_samples(samples, points=None, tolerances=None):
    """Frenet apparatus of a uniformly sampled curve

    Derivatives of the positions are central differences along the sample
    axis (9-point stencils when at least 17 samples are available, 5-point
    stencils otherwise). Every derivative is computed for the strides
    1, 2, 4, ... samples and each row keeps the stride whose estimate agrees
    best with its neighbours on the ladder. Sigma comes from a second stride
    ladder on tau/kappa.

    Each row carries an error estimate for sigma, combining the disagreement
    along the tau/kappa ladder with the error of tau/kappa itself amplified
    by the outer stencil. Rows whose estimate exceeds
    ``tolerances.sigma_sampled / SAMPLED_RESOLUTION`` are not resolved by
    the sampling and are dropped; if too few rows remain, the best-resolved
    ones are kept and a warning is logged. Rows where no stencil fits, or
    where the curvature vanishes, are dropped as well.

    .. versionadded:: 0.1

    Parameters
    ----------
    samples : :py:class:`~rshelix.curves.CurveSamples`
        Samples on a uniform arc-length grid
    points : int, optional
        Stencil width for the position derivatives
    tolerances : :py:class:`~rshelix.utils.Tolerances`, optional

    Returns
    -------
    samples : :py:class:`~rshelix.curves.CurveSamples`
        The rows that carry a Frenet apparatus, with backend 'sampled'

    Raises
    ------
    InsufficientSamples
        With fewer than 7 samples
    MalformedInput
        If the grid is not uniform
    CurvatureVanishes
        If the curvature vanishes on every row
    """
    if tolerances is None:
        tolerances = Tolerances()
    n_samples = len(samples)
    if n_samples < MIN_SAMPLES:
        raise InsufficientSamples(f'Need at least {MIN_SAMPLES} samples, not '
                                  f'{n_samples}.')
    try:
        step = uniform_step(samples.s)
    except ValueError as e:
        raise MalformedInput(f'Sampled curves need a uniform grid: {e}')
    if points is None:
        points = SAMPLED_POINTS if n_samples >= 2 * SAMPLED_POINTS - 1 else 5
    half = points // 2
    logger.debug(f'Differentiating {n_samples} samples with step {step:.4g} '
                 f'and {points}-point stencils.')
    derivs, errors = [], []
    for order in (1, 2, 3):
        ladder = _stride_ladder(samples.points, step, order, points)
        deriv, error, _ = stable_estimate(ladder, value_ndim=1, spread=half)
        derivs.append(deriv)
        errors.append(error)
    d1, d2, d3 = derivs
    err1, err2, err3 = errors
    kappa = norm(d2)
    flat = kappa <= tolerances.eps_kappa
    if not np.any(np.isfinite(kappa) & ~flat):
        raise CurvatureVanishes('Curvature vanishes on every sample.')
    if np.any(flat):
        logger.warning(f'Dropping {np.count_nonzero(flat)} samples with '
                       f'curvature below {tolerances.eps_kappa}.')
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        kappa = np.where(flat, np.nan, kappa)
        tau = triple(d1, d2, d3) / kappa ** 2
        ratio = tau / kappa
        ratio_err = ((err3 + norm(d3) * err1) / kappa ** 2 +
                     2 * np.abs(ratio) * err2 / kappa)
        rate, rate_err, outer_step = _ratio_rate(ratio, step)
        gain = np.abs(stencil_weights(1, 5)).sum()
        sigma_err = sigma_from(kappa, tau, rate_err +
                               gain * ratio_err / outer_step)
    sigma_err = np.where(np.isnan(sigma_err), np.inf, np.abs(sigma_err))
    finite = (np.isfinite(rate) & np.isfinite(tau) &
              np.all(np.isfinite(d1), axis=-1))
    n_finite = np.count_nonzero(finite)
    if n_finite < 3:
        raise InsufficientSamples(f'Only {n_finite} samples carry a Frenet '
                                  f'apparatus.')
    keep = finite & (sigma_err <= tolerances.sigma_sampled /
                     SAMPLED_RESOLUTION)
    wanted = min(n_finite, max(3, int(SAMPLED_KEEP_FRACTION * n_samples)))
    if np.count_nonzero(keep) < wanted:
        logger.warning(f'Only {np.count_nonzero(keep)} of {n_samples} '
                       f'samples resolve sigma; keeping the {wanted} best.')
        best = np.argsort(np.where(finite, sigma_err, np.inf),
                          kind='stable')[:wanted]
        keep = np.zeros(n_samples, dtype=bool)
        keep[best] = True
    logger.debug(f'Keeping {np.count_nonzero(keep)} of {n_samples} samples.')
    t = d1[keep]
    n = d2[keep] / kappa[keep, None]
    frenet = FrenetApparatus(samples.s[keep], t, n, cross(t, n), kappa[keep],
                             tau[keep], ratio_rate=rate[keep],
                             backend='sampled')
    return CurveSamples(samples.s[keep], samples.points[keep], frenet=frenet,
                        backend='sampled', tolerances=tolerances)
