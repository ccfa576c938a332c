"""Spherical images of the tangent, normal and binormal

.. autosummary::
    :toctree: _api

    base

"""
from .base import (SphericalTrace, indicatrix, latitude_check, implied_angle,
                   INDICATRICES)

__all__ = [
    'implied_angle',
    'INDICATRICES',
    'indicatrix',
    'latitude_check',
    'SphericalTrace',
]
