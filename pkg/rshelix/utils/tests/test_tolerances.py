import pytest
import numpy.testing as npt

from rshelix.utils import Tolerances, FreezeError
from rshelix.utils.constants import DEFAULT_TOLERANCES, EPS_KAPPA


def test_Tolerances():
    tol = Tolerances()
    for key, val in DEFAULT_TOLERANCES.items():
        npt.assert_equal(getattr(tol, key), val)
    npt.assert_equal(tol.eps_kappa, EPS_KAPPA)
    npt.assert_equal(tol.scale, 1.0)

    # Overwrite individual tolerances:
    tol = Tolerances(sigma=1e-3)
    npt.assert_equal(tol.sigma, 1e-3)
    with pytest.raises(AttributeError):
        Tolerances(not_a_tolerance=1)

    # Global scale leaves the definitional floors alone:
    tol = Tolerances(scale=100)
    npt.assert_almost_equal(tol.sigma / DEFAULT_TOLERANCES['sigma'], 100)
    npt.assert_equal(tol.eps_kappa, EPS_KAPPA)
    for scale in [0, -1]:
        with pytest.raises(ValueError):
            Tolerances(scale=scale)

    # Immutable:
    with pytest.raises(FreezeError):
        tol.sigma = 1
    # Printable:
    npt.assert_equal(repr(tol).startswith('Tolerances('), True)


def test_Tolerances_for_backend():
    tol = Tolerances()
    npt.assert_equal(tol.for_backend('sigma', 'closed-form'), tol.sigma)
    npt.assert_equal(tol.for_backend('sigma', 'finite-difference'),
                     tol.sigma_sampled)
    npt.assert_equal(tol.for_backend('sigma', 'sampled'), tol.sigma_sampled)
    # No sampled variant:
    npt.assert_equal(tol.for_backend('cone', 'sampled'), tol.cone)


def test_Tolerances_from_env(monkeypatch):
    monkeypatch.delenv('RSH_TOL', raising=False)
    npt.assert_equal(Tolerances.from_env().scale, 1)
    monkeypatch.setenv('RSH_TOL', '10')
    tol = Tolerances.from_env()
    npt.assert_equal(tol.scale, 10)
    npt.assert_almost_equal(tol.leak, 10 * DEFAULT_TOLERANCES['leak'])
    for value in ['abc', '0', '-2']:
        monkeypatch.setenv('RSH_TOL', value)
        with pytest.raises(ValueError):
            Tolerances.from_env()
