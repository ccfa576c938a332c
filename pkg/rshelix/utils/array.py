"""`is_strictly_increasing`, `uniform_step`"""
import numpy as np


def is_strictly_increasing(arr):
    """Return True if every element of a 1-D array exceeds its predecessor

    Parameters
    ----------
    arr : array_like
        1-D sequence
    """
    arr = np.asarray(arr, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f'Expected a 1-D array, not shape {arr.shape}.')
    return bool(np.all(np.diff(arr) > 0))


def uniform_step(arr, rtol=1e-6):
    """Return the spacing of a uniformly spaced, increasing 1-D grid

    .. versionadded:: 0.1

    Parameters
    ----------
    arr : array_like
        1-D grid with at least two elements
    rtol : float, optional
        Maximum relative deviation of any spacing from the mean spacing

    Returns
    -------
    step : float
        The mean spacing

    Raises
    ------
    ValueError
        If the grid has fewer than two points, is not strictly increasing,
        or is not uniform within ``rtol``.
    """
    arr = np.asarray(arr, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError('A grid needs at least two points.')
    diffs = np.diff(arr)
    if np.any(diffs <= 0):
        raise ValueError('Grid must be strictly increasing.')
    step = (arr[-1] - arr[0]) / (arr.size - 1)
    if np.max(np.abs(diffs - step)) > rtol * step:
        raise ValueError(f'Grid is not uniformly spaced (relative tolerance '
                         f'{rtol}).')
    return float(step)
