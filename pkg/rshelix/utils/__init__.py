"""Various utility and helper functions.

.. autosummary::
    :toctree: _api

    base
    constants
    tolerances
    geometry
    array
    stats
    parallel
    testing

"""
from .base import (PrettyPrint, FreezeError, Frozen, freeze_array,
                   CurvatureVanishes, OutOfDomain, StencilOutOfDomain,
                   InvalidParams, InsufficientSamples, EmptyTrace,
                   MalformedInput)
from .tolerances import Tolerances
from .geometry import vec3, dot, cross, norm, normalize, triple
from .array import is_strictly_increasing, uniform_step
from .stats import r2_score, max_deviation
from .parallel import parfor

__all__ = [
    'cross',
    'CurvatureVanishes',
    'dot',
    'EmptyTrace',
    'freeze_array',
    'FreezeError',
    'Frozen',
    'InsufficientSamples',
    'InvalidParams',
    'is_strictly_increasing',
    'MalformedInput',
    'max_deviation',
    'norm',
    'normalize',
    'OutOfDomain',
    'parfor',
    'PrettyPrint',
    'r2_score',
    'StencilOutOfDomain',
    'Tolerances',
    'triple',
    'uniform_step',
    'vec3',
]
