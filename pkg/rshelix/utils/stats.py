"""`r2_score`, `max_deviation`"""
import numpy as np
from math import isclose


def r2_score(y_true, y_pred):
    """Coefficient of determination of a fit

    R² = 1 - SS_res / SS_tot, 1.0 for a perfect fit. Used to report how well
    tau/kappa follows a straight line in arc length.

    Parameters
    ----------
    y_true, y_pred : array-like
        Measured and fitted values, same size, at least two

    Returns
    -------
    r2 : float
        0.0 when ``y_true`` is constant
    """
    y_true = np.asarray(y_true, dtype=float)
    y_pred = np.asarray(y_pred, dtype=float)
    if y_true.size != y_pred.size:
        raise ValueError(f'"y_true" ({y_true.size}) and "y_pred" '
                         f'({y_pred.size}) must have the same size.')
    if y_true.size < 2:
        raise ValueError('Need at least two data points.')
    ss_res = np.sum((y_true - y_pred) ** 2)
    ss_tot = np.sum((y_true - np.mean(y_true)) ** 2)
    if isclose(ss_tot, 0, abs_tol=1e-24):
        return 0.0
    return float(1 - ss_res / ss_tot)


def max_deviation(values):
    """Return (mean, max |value - mean|) of a 1-D sample

    Max absolute deviation from the mean is the assertable form of
    "is constant".

    Parameters
    ----------
    values : array-like
        Non-empty sample
    """
    values = np.asarray(values, dtype=float).ravel()
    if values.size == 0:
        raise ValueError('Need at least one value.')
    mean = float(np.mean(values))
    return mean, float(np.max(np.abs(values - mean)))
