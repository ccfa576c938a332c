"""The closed-form family of rectifying slant helices on a cone

.. autosummary::
    :toctree: _api

    params
    helix

"""
from .params import FamilyParams, ConeParams, AxisComponents, FamilyEvaluation
from .helix import (RectifyingSlantHelix, make_rs_helix, family_evaluate,
                    closed_form_kappa_tau, general_kappa_tau, c3_from_sigma,
                    closed_form_normal, axis_components, rectifying_components,
                    position_norm, ode_coefficient, cone_of, cone_residual,
                    NORMAL_SIGN, AXIS_SIGN)

__all__ = [
    'AXIS_SIGN',
    'axis_components',
    'AxisComponents',
    'c3_from_sigma',
    'closed_form_kappa_tau',
    'closed_form_normal',
    'cone_of',
    'cone_residual',
    'ConeParams',
    'family_evaluate',
    'FamilyEvaluation',
    'FamilyParams',
    'general_kappa_tau',
    'make_rs_helix',
    'NORMAL_SIGN',
    'ode_coefficient',
    'position_norm',
    'rectifying_components',
    'RectifyingSlantHelix',
]
