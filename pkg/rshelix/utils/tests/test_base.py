import numpy as np
import pytest
import numpy.testing as npt

from rshelix.utils import Frozen, FreezeError, PrettyPrint, freeze_array


class PrettyPrinter(PrettyPrint):

    def _pprint_params(self):
        return {}


class PrettyPrinter2(PrettyPrint):

    def _pprint_params(self):
        return {'b': None, 'a': 3, 'c': 0.25, 'd': 'x'}


def test_PrettyPrint():
    npt.assert_equal(str(PrettyPrinter()), "PrettyPrinter()")
    npt.assert_equal(str(PrettyPrinter2()),
                     "PrettyPrinter2(a=3, b=None, c=0.25, d='x')")


class FrozenChild(Frozen):

    def __init__(self, a, b=0):
        self.a = a
        self.b = b
        self._freeze()


def test_Frozen():
    # Setting attributes in constructor is fine:
    frozen_child = FrozenChild(1)
    npt.assert_almost_equal(frozen_child.a, 1)
    npt.assert_almost_equal(frozen_child.b, 0)
    # But not outside constructor:
    with pytest.raises(FreezeError):
        frozen_child.c = 3
    with pytest.raises(FreezeError):
        frozen_child.a = 2
    with pytest.raises(FreezeError):
        del frozen_child.b
    # FreezeError is an AttributeError:
    with pytest.raises(AttributeError):
        frozen_child.a = 2


def test_freeze_array():
    src = [1, 2, 3]
    arr = freeze_array(src)
    npt.assert_equal(arr.dtype, np.float64)
    npt.assert_almost_equal(arr, src)
    with pytest.raises(ValueError):
        arr[0] = 10
    # The input is copied:
    writable = np.zeros(3)
    frozen = freeze_array(writable)
    writable[0] = 1
    npt.assert_equal(frozen[0], 0)


def test_errors():
    from rshelix.utils import (CurvatureVanishes, OutOfDomain,
                               StencilOutOfDomain, InvalidParams,
                               InsufficientSamples, EmptyTrace,
                               MalformedInput)
    for err in (CurvatureVanishes, OutOfDomain, StencilOutOfDomain,
                InvalidParams, InsufficientSamples, EmptyTrace,
                MalformedInput):
        npt.assert_equal(issubclass(err, ValueError), True)
    npt.assert_equal(issubclass(StencilOutOfDomain, OutOfDomain), True)
