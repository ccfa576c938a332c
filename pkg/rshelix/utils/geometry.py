"""
`vec3`, `dot`, `cross`, `norm`, `normalize`, `triple`
"""

import numpy as np


def vec3(x, y, z):
    """Build a point/vector of Euclidean 3-space

    Vectors are plain NumPy arrays with a trailing axis of length 3, so that
    batches of vectors (one per arc-length sample) have shape (n, 3).

    Parameters
    ----------
    x, y, z : scalar or array-like
        Coordinates; array inputs must broadcast against each other

    Returns
    -------
    v : np.ndarray
        Array of shape ``broadcast(x, y, z).shape + (3,)``
    """
    x, y, z = np.broadcast_arrays(np.asarray(x, dtype=float),
                                  np.asarray(y, dtype=float),
                                  np.asarray(z, dtype=float))
    return np.stack((x, y, z), axis=-1)


def dot(a, b):
    """Euclidean inner product g(a, b) over the last axis"""
    return np.sum(np.asarray(a, dtype=float) * np.asarray(b, dtype=float),
                  axis=-1)


def cross(a, b):
    """Cross product over the last axis"""
    return np.cross(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def norm(a):
    """Euclidean norm over the last axis"""
    return np.sqrt(dot(a, a))


def normalize(a):
    """Return ``a / norm(a)`` over the last axis

    Zero vectors cannot be normalized and raise a ValueError.
    """
    a = np.asarray(a, dtype=float)
    length = norm(a)
    if np.any(length == 0):
        raise ValueError("Cannot normalize a zero vector.")
    return a / length[..., None]


def triple(a, b, c):
    """Scalar triple product g(a x b, c), i.e. det[a, b, c]"""
    return dot(cross(a, b), c)
