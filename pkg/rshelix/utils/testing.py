"""`assert_unit`, `assert_orthonormal_frame`, `assert_vec_close`"""

import numpy as np
import numpy.testing as npt

from .geometry import cross, dot, norm


def assert_unit(vectors, atol=1e-9):
    """Assert that every vector (last axis) has unit length

    Parameters
    ----------
    vectors : array-like
        Array of shape (..., 3)
    atol : float, optional
        Absolute tolerance on | |v| - 1 |
    """
    lengths = np.atleast_1d(norm(vectors))
    npt.assert_allclose(lengths, np.ones_like(lengths), rtol=0, atol=atol)


def assert_orthonormal_frame(t, n, b, atol=1e-8):
    """Assert that {t, n, b} is orthonormal and right-handed

    All three arguments are arrays of shape (..., 3) and are checked
    row by row.
    """
    for vec in (t, n, b):
        assert_unit(vec, atol=atol)
    for a, c in ((t, n), (t, b), (n, b)):
        npt.assert_allclose(np.atleast_1d(dot(a, c)), 0, rtol=0, atol=atol)
    npt.assert_array_less(0, np.atleast_1d(dot(cross(t, n), b)))


def assert_vec_close(actual, desired, atol):
    """Assert vectors agree within ``atol`` in every component"""
    npt.assert_allclose(np.asarray(actual, dtype=float),
                        np.asarray(desired, dtype=float), rtol=0, atol=atol)
