import numpy as np
import pytest
import numpy.testing as npt

from rshelix.family import (FamilyParams, ConeParams, AxisComponents,
                            FamilyEvaluation)
from rshelix.utils import InvalidParams, FreezeError


def test_FamilyParams():
    params = FamilyParams.from_cos_theta(1, 0, 1 / 3)
    npt.assert_almost_equal(params.cos_theta, 1 / 3)
    npt.assert_almost_equal(params.sin_theta, 2 * np.sqrt(2) / 3)
    npt.assert_almost_equal(params.tan_theta, 2 * np.sqrt(2))
    npt.assert_almost_equal(params.sec_theta, 3)
    npt.assert_almost_equal(params.c3, 2 * np.sqrt(2))
    npt.assert_almost_equal(params.sigma, 1 / (2 * np.sqrt(2)))
    npt.assert_almost_equal(params.slope_sq, 8)
    npt.assert_almost_equal(params.f([0, 1, 2]), [0, 1, 2])
    npt.assert_almost_equal(params.h(1.0), 3 * np.pi / 4)
    npt.assert_equal(params.zero_torsion_at, 0)
    d = params.to_dict()
    npt.assert_equal(list(d), ['c1', 'c2', 'theta', 'cos_theta'])
    npt.assert_almost_equal(d['cos_theta'], 1 / 3)
    with pytest.raises(FreezeError):
        params.c1 = 2
    npt.assert_equal('c1=1.0' in repr(params), True)


def test_FamilyParams_example2():
    params = FamilyParams.from_cos_theta(0.5, -0.2, 0.1)
    npt.assert_almost_equal(params.slope_sq, 99)
    npt.assert_almost_equal(params.c3, 1.5 * np.sqrt(11))
    npt.assert_almost_equal(params.zero_torsion_at, 0.4)
    npt.assert_almost_equal(FamilyParams(1, 0, np.pi / 4).slope_sq, 1)
    npt.assert_almost_equal(FamilyParams.from_degrees(1, 0, 60).slope_sq, 3)


@pytest.mark.parametrize('c1,theta', [(1, 0.5), (-1, 0.5), (1, -0.5),
                                      (-1, -0.5), (2, 2.5), (-2, 2.5)])
def test_FamilyParams_canonical_sign(c1, theta):
    params = FamilyParams(c1, 0.3, theta)
    # cos(theta) and the cone are unchanged, c1 tan(theta) becomes positive:
    npt.assert_almost_equal(params.cos_theta, np.cos(theta))
    npt.assert_almost_equal(params.slope_sq, np.tan(theta) ** 2)
    npt.assert_equal(params.c1 * params.tan_theta > 0, True)
    npt.assert_almost_equal(params.c3, abs(c1 * np.tan(theta)))
    npt.assert_equal(np.sign(params.sigma), np.sign(c1))


@pytest.mark.parametrize('c1,c2,theta', [(0, 0, 0.5), (1, 0, 0),
                                         (1, 0, np.pi / 2), (1, 0, np.pi),
                                         (1, 0, -3 * np.pi / 2),
                                         (np.nan, 0, 0.5), (1, np.inf, 0.5),
                                         ('a', 0, 0.5)])
def test_FamilyParams_invalid(c1, c2, theta):
    with pytest.raises(InvalidParams):
        FamilyParams(c1, c2, theta)


def test_FamilyParams_invalid_cos_theta():
    with pytest.raises(InvalidParams, match='k pi/2'):
        FamilyParams.from_cos_theta(1, 0, 1)
    with pytest.raises(InvalidParams, match='k pi/2'):
        FamilyParams.from_cos_theta(1, 0, 0)
    with pytest.raises(InvalidParams):
        FamilyParams.from_cos_theta(1, 0, 1.5)
    # InvalidParams is a ValueError:
    with pytest.raises(ValueError):
        FamilyParams.from_cos_theta(0, 0, 0.5)


def test_ConeParams():
    cone = ConeParams(8)
    npt.assert_almost_equal(cone.slope, 2 * np.sqrt(2))
    for slope_sq in (0, -1, np.inf):
        with pytest.raises(InvalidParams):
            ConeParams(slope_sq)


def test_AxisComponents():
    axis = AxisComponents([0.6, 0], 0.8, [0, 0.6])
    npt.assert_equal(axis.lambda2, [0.8, 0.8])
    npt.assert_almost_equal(axis.norm_sq(), [1, 1])
    frame = np.eye(3)
    npt.assert_almost_equal(axis.reconstruct(frame[0], frame[1], frame[2]),
                            [[0.6, 0.8, 0], [0, 0.8, 0.6]])
    with pytest.raises(ValueError):
        axis.lambda1[0] = 1


def test_FamilyEvaluation():
    ev = FamilyEvaluation([0, 1], [1, 2], [0, 0], [1, 1], [1, 2])
    npt.assert_equal(ev.tau / ev.kappa, ev.f_value)
    with pytest.raises(FreezeError):
        ev.extra = 1
