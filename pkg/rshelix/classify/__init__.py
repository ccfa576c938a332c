"""Slant-helix and rectifying-curve classification and verification

.. autosummary::
    :toctree: _api

    base
    report
    suite

"""
from .base import (RectifyingFit, SlantVerdict, RectifyingDecomposition,
                   OdeCheck, rectifying_fit, slant_verdict,
                   rectifying_decomposition, ode_residual,
                   v_identity_residual, v_prime_residual, v_second_residual,
                   kappa_identity_residual)
from .report import CheckResult, VerificationReport
from .suite import (classify_full, verify_family, random_family_params,
                    parameter_sweep)

__all__ = [
    'CheckResult',
    'classify_full',
    'kappa_identity_residual',
    'ode_residual',
    'OdeCheck',
    'parameter_sweep',
    'random_family_params',
    'rectifying_decomposition',
    'rectifying_fit',
    'RectifyingDecomposition',
    'RectifyingFit',
    'slant_verdict',
    'SlantVerdict',
    'v_identity_residual',
    'v_prime_residual',
    'v_second_residual',
    'VerificationReport',
    'verify_family',
]
