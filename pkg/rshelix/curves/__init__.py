"""Curves in Euclidean 3-space, derivative oracles and the Frenet apparatus

.. autosummary::
    :toctree: _api

    base
    finite_difference
    frenet
    jets
    samples
    standard
    integrate

"""
from .finite_difference import (stencil_weights, finite_difference,
                                sampled_derivative, stable_estimate,
                                adaptive_difference)
from .base import Curve, ClosedFormCurve, FiniteDifferenceCurve
from .frenet import (FrenetApparatus, frenet_at, frame_from_derivatives,
                     speed, frame_residual, sigma_from)
from .jets import Jet
from .samples import CurveSamples, sample_curve, frenet_samples
from .standard import StraightLine, CircularHelix, ArcLengthCurve
from .integrate import integrate_frenet

__all__ = [
    'adaptive_difference',
    'ArcLengthCurve',
    'CircularHelix',
    'ClosedFormCurve',
    'Curve',
    'CurveSamples',
    'FiniteDifferenceCurve',
    'finite_difference',
    'frame_from_derivatives',
    'frame_residual',
    'frenet_at',
    'frenet_samples',
    'FrenetApparatus',
    'integrate_frenet',
    'Jet',
    'sample_curve',
    'sampled_derivative',
    'sigma_from',
    'speed',
    'stable_estimate',
    'stencil_weights',
    'StraightLine',
]
