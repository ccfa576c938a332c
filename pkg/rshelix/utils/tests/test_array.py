import numpy as np
import pytest
import numpy.testing as npt

from rshelix.utils import is_strictly_increasing, uniform_step


def test_is_strictly_increasing():
    npt.assert_equal(is_strictly_increasing([0, 1, 2]), True)
    npt.assert_equal(is_strictly_increasing([0, 1, 1]), False)
    npt.assert_equal(is_strictly_increasing([2, 1]), False)
    npt.assert_equal(is_strictly_increasing([5]), True)
    with pytest.raises(ValueError):
        is_strictly_increasing(np.zeros((2, 2)))


def test_uniform_step():
    npt.assert_almost_equal(uniform_step(np.linspace(-3, 3, 1001)), 0.006)
    npt.assert_almost_equal(uniform_step([0, 2]), 2)
    with pytest.raises(ValueError):
        uniform_step([1])
    with pytest.raises(ValueError):
        uniform_step([0, 1, 1, 2])
    with pytest.raises(ValueError):
        uniform_step([0, 1, 3])
