"""`Curve`, `ClosedFormCurve`, `FiniteDifferenceCurve`"""
from abc import abstractmethod
from copy import deepcopy

import numpy as np

from ..utils.base import Frozen, PrettyPrint, OutOfDomain, StencilOutOfDomain
from ..utils.constants import (DEFAULT_DOMAIN, DEFAULT_GRID_SIZE, FD_STEPS,
                               FD_LEVELS)
from .finite_difference import adaptive_difference, MAX_FD_ORDER


def _interval(pair, name):
    try:
        lo, hi = (float(v) for v in pair)
    except (TypeError, ValueError):
        raise TypeError(f'"{name}" must be a (lo, hi) tuple, not {pair}.')
    if np.isnan(lo) or np.isnan(hi) or not lo < hi:
        raise ValueError(f'"{name}" must satisfy lo < hi, not ({lo}, {hi}).')
    return lo, hi


class Curve(Frozen, PrettyPrint):
    """Base class for arc-length parametrized curves in Euclidean 3-space

    A curve is a derivative oracle: ``curve(s, order)`` returns the
    ``order``-th derivative of the position vector with respect to arc
    length, vectorized over ``s``.

    Subclasses set their own attributes, call ``Curve.__init__`` and then
    freeze themselves.

    .. versionadded:: 0.1

    Parameters
    ----------
    domain : (s_min, s_max), optional
        Closed arc-length interval on which the curve is accepted
    support : (lo, hi), optional
        Interval on which the underlying evaluator is defined; stencils may
        use it beyond ``domain``. Defaults to ``domain``.

    """
    #: 'closed-form' or 'finite-difference'
    backend = None
    #: Highest available derivative order (None: unbounded)
    max_order = None

    def __init__(self, domain=DEFAULT_DOMAIN, support=None):
        self.domain = _interval(domain, 'domain')
        if support is None:
            support = self.domain
        support = (float(support[0]), float(support[1]))
        if support[0] > self.domain[0] or support[1] < self.domain[1]:
            raise ValueError(f'"support" {support} must contain "domain" '
                             f'{self.domain}.')
        self.support = support

    def _pprint_params(self):
        return {'domain': self.domain, 'backend': self.backend}

    def _check_order(self, order):
        if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
            raise TypeError(f'"order" must be an integer, not {type(order)}.')
        if order < 0:
            raise ValueError(f'"order" must be non-negative, not {order}.')
        if self.max_order is not None and order > self.max_order:
            raise ValueError(f'{self.__class__.__name__} provides derivatives '
                             f'up to order {self.max_order}, not {order}.')

    def check_domain(self, s):
        """Raise :py:class:`~rshelix.utils.OutOfDomain` outside the domain"""
        s = np.asarray(s, dtype=float)
        lo, hi = self.domain
        if np.any(np.isnan(s)) or np.any(s < lo) or np.any(s > hi):
            raise OutOfDomain(f's={s} lies outside the domain [{lo}, {hi}].')

    def __call__(self, s, order=0):
        """Evaluate the ``order``-th derivative of the position at ``s``

        Parameters
        ----------
        s : float or array-like
            Arc-length parameter(s) within ``domain``
        order : int, optional
            Derivative order (0 is the position itself)

        Returns
        -------
        vec : np.ndarray
            Array of shape ``np.shape(s) + (3,)``
        """
        self._check_order(order)
        self.check_domain(s)
        return self._evaluate(np.asarray(s, dtype=float), order)

    def stencil_eval(self, s, order=0):
        """Evaluate at stencil nodes, which may lie anywhere in ``support``

        Raises :py:class:`~rshelix.utils.StencilOutOfDomain` if a node lies
        outside ``support``.
        """
        self._check_order(order)
        s = np.asarray(s, dtype=float)
        lo, hi = self.support
        if np.any(s < lo) or np.any(s > hi):
            raise StencilOutOfDomain(f'Stencil nodes {s} leave the support '
                                     f'[{lo}, {hi}].')
        return self._evaluate(s, order)

    @abstractmethod
    def _evaluate(self, s, order):
        """Derivative of order ``order`` at float array ``s``, unchecked"""
        raise NotImplementedError

    def grid(self, n=DEFAULT_GRID_SIZE):
        """Uniform grid of ``n`` points spanning the domain"""
        if n < 2:
            raise ValueError(f'A grid needs at least two points, not {n}.')
        return np.linspace(self.domain[0], self.domain[1], num=int(n))


class ClosedFormCurve(Curve):
    """Curve with exact derivatives of every order

    The evaluator is defined on the whole real line, so stencils built around
    points of the domain never run out of support.

    .. versionadded:: 0.1

    """
    backend = 'closed-form'
    max_order = None

    def __init__(self, domain=DEFAULT_DOMAIN):
        super(ClosedFormCurve, self).__init__(domain=domain,
                                              support=(-np.inf, np.inf))

    def to_finite_difference(self, steps=None):
        """Return the same curve behind a finite-difference oracle

        Only the position is taken from this curve; all derivatives are
        estimated by central differences. Used to compare both backends.
        """
        return FiniteDifferenceCurve(self._position, domain=self.domain,
                                     support=self.support, steps=steps)

    def _position(self, s):
        return self._evaluate(np.asarray(s, dtype=float), 0)


class FiniteDifferenceCurve(Curve):
    """Curve given by its position only, differentiated numerically

    Derivatives of order k are central differences on a stencil of
    ``points`` nodes, ``(top, points) = steps[k]``. The steps
    ``top * (1 + |s|) / 2**j`` for ``j < levels`` are tried and each point
    keeps the most stable estimate
    (:py:func:`~rshelix.curves.adaptive_difference`).

    .. versionadded:: 0.1

    Parameters
    ----------
    func : callable
        Vectorized position: maps an array of arc-length values to an array
        of shape ``s.shape + (3,)``. Must be (close to) unit speed.
    domain : (s_min, s_max), optional
        Arc-length interval on which the curve is accepted
    support : (lo, hi), optional
        Interval on which ``func`` may be evaluated. Defaults to ``domain``,
        in which case derivatives near the domain ends raise
        :py:class:`~rshelix.utils.StencilOutOfDomain`.
    steps : dict, optional
        ``{order: (top, points)}`` step policy, defaults to ``FD_STEPS``
    levels : int, optional
        Number of step halvings tried

    """
    backend = 'finite-difference'
    max_order = MAX_FD_ORDER

    def __init__(self, func, domain=DEFAULT_DOMAIN, support=None, steps=None,
                 levels=FD_LEVELS):
        if not callable(func):
            raise TypeError(f'"func" must be callable, not {type(func)}.')
        self.func = func
        policy = deepcopy(FD_STEPS)
        if steps is not None:
            for order, (top, points) in steps.items():
                if order not in policy:
                    raise ValueError(f'No finite-difference order {order}.')
                if not top > 0:
                    raise ValueError(f'Top step must be positive, not '
                                     f'{top}.')
                policy[order] = (float(top), int(points))
        if int(levels) < 1:
            raise ValueError(f'"levels" must be a positive integer, not '
                             f'{levels}.')
        self.steps = policy
        self.levels = int(levels)
        super(FiniteDifferenceCurve, self).__init__(domain=domain,
                                                    support=support)
        self._freeze()

    def _pprint_params(self):
        params = super(FiniteDifferenceCurve, self)._pprint_params()
        params.update({'steps': self.steps, 'levels': self.levels})
        return params

    def steps_at(self, s, order):
        """Step ladder for derivative ``order`` at ``s``, largest first

        Returns an array of shape ``(levels,) + np.shape(s)``.
        """
        top, _ = self.steps[order]
        scale = top * (1.0 + np.abs(np.asarray(s, dtype=float)))
        return 0.5 ** np.arange(self.levels).reshape(
            (-1,) + scale.shape) * scale

    def _difference(self, s, order, strict):
        top, points = self.steps[order]
        value, _ = adaptive_difference(self.func, s, order,
                                       top * (1.0 + np.abs(s)), points=points,
                                       levels=self.levels,
                                       support=self.support, strict=strict)
        return value

    def _evaluate(self, s, order):
        if order == 0:
            return np.asarray(self.func(s), dtype=float)
        return self._difference(s, order, strict=True)

    def stencil_eval(self, s, order=0):
        """Evaluate at stencil nodes anywhere in ``support``

        Unlike a call, a node too close to the support ends for any step of
        the ladder yields NaN instead of raising.
        """
        self._check_order(order)
        s = np.asarray(s, dtype=float)
        lo, hi = self.support
        if np.any(s < lo) or np.any(s > hi):
            raise StencilOutOfDomain(f'Stencil nodes {s} leave the support '
                                     f'[{lo}, {hi}].')
        if order == 0:
            return np.asarray(self.func(s), dtype=float)
        return self._difference(s, order, strict=False)
