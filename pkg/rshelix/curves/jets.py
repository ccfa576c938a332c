"""`Jet`

Truncated Taylor series ("jets") with NumPy coefficients. A jet of length K
stores the normalized derivatives ``f^(k)(s) / k!`` for ``k < K`` along its
first axis; any trailing axes (sample axis, vector axis) are carried along.
"""
import numpy as np
from scipy.special import factorial


class Jet(object):
    """Truncated Taylor expansion of a scalar or vector field

    .. versionadded:: 0.1

    Parameters
    ----------
    coeffs : array-like
        Normalized Taylor coefficients, shape (K, ...)

    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.ndim == 0 or coeffs.shape[0] == 0:
            raise ValueError('A jet needs at least one coefficient.')
        self.coeffs = coeffs

    @classmethod
    def from_derivatives(cls, derivs):
        """Build a jet from the derivatives f, f', f'', ..."""
        derivs = np.asarray(derivs, dtype=float)
        k = np.arange(derivs.shape[0])
        scale = factorial(k).reshape((-1,) + (1,) * (derivs.ndim - 1))
        return cls(derivs / scale)

    def __len__(self):
        return self.coeffs.shape[0]

    def derivative(self, k=0):
        """The k-th derivative at the expansion point"""
        if k >= len(self):
            raise ValueError(f'Jet of length {len(self)} has no derivative '
                             f'of order {k}.')
        return self.coeffs[k] * factorial(k)

    def diff(self):
        """Jet of the derivative (one coefficient shorter)"""
        if len(self) < 2:
            raise ValueError('Cannot differentiate a jet of length 1.')
        k = np.arange(1, len(self)).reshape((-1,) + (1,) *
                                            (self.coeffs.ndim - 1))
        return Jet(k * self.coeffs[1:])

    def truncate(self, length):
        return Jet(self.coeffs[:length])

    @staticmethod
    def _as_factor(coeffs, ndim):
        # Scalar jets act on vector jets along the trailing vector axis:
        return coeffs.reshape(coeffs.shape + (1,) * (ndim - coeffs.ndim))

    def __mul__(self, other):
        """Cauchy product; a scalar jet broadcasts over a vector axis"""
        if not isinstance(other, Jet):
            return Jet(self.coeffs * other)
        length = min(len(self), len(other))
        ndim = max(self.coeffs.ndim, other.coeffs.ndim)
        a = self._as_factor(self.coeffs[:length], ndim)
        b = self._as_factor(other.coeffs[:length], ndim)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape))
        for k in range(length):
            for j in range(k + 1):
                out[k] += a[j] * b[k - j]
        return Jet(out)

    __rmul__ = __mul__

    def __add__(self, other):
        length = min(len(self), len(other))
        return Jet(self.coeffs[:length] + other.coeffs[:length])

    def __sub__(self, other):
        length = min(len(self), len(other))
        return Jet(self.coeffs[:length] - other.coeffs[:length])

    def __truediv__(self, other):
        """Division by a scalar jet with nonzero constant term"""
        if not isinstance(other, Jet):
            return Jet(self.coeffs / other)
        length = min(len(self), len(other))
        ndim = max(self.coeffs.ndim, other.coeffs.ndim)
        a = self._as_factor(self.coeffs[:length], ndim)
        b = self._as_factor(other.coeffs[:length], ndim)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape))
        for k in range(length):
            acc = a[k]
            for j in range(1, k + 1):
                acc = acc - b[j] * out[k - j]
            out[k] = acc / b[0]
        return Jet(out)

    def dot(self, other):
        """Euclidean inner product of two vector jets (last axis)"""
        return Jet(np.sum((self * other).coeffs, axis=-1))

    def sqrt(self):
        """Square root of a scalar jet with positive constant term"""
        a = self.coeffs
        out = np.zeros_like(a)
        out[0] = np.sqrt(a[0])
        for k in range(1, len(self)):
            acc = a[k]
            for j in range(1, k):
                acc = acc - out[j] * out[k - j]
            out[k] = acc / (2 * out[0])
        return Jet(out)
