"""`PrettyPrint`, `Frozen`, `FreezeError`, `freeze_array`, `CurvatureVanishes`,
   `OutOfDomain`, `StencilOutOfDomain`, `InvalidParams`, `InsufficientSamples`,
   `EmptyTrace`, `MalformedInput`"""
import abc
from collections import OrderedDict as ODict

import numpy as np


class PrettyPrint(object, metaclass=abc.ABCMeta):
    """PrettyPrint

    An abstract class that provides a way to prettyprint all class attributes,
    inspired by scikit-learn.

    Classes deriving from PrettyPrint are required to implement a
    ``_pprint_params`` method that returns a dictionary containing all the
    attributes to prettyprint.

    Examples
    --------
    >>> from rshelix.utils import PrettyPrint
    >>> class Pair(PrettyPrint):
    ...     def __init__(self, a, b):
    ...         self.a = a
    ...         self.b = b
    ...
    ...     def _pprint_params(self):
    ...         return {'a': self.a, 'b': self.b}
    >>> Pair(1, 0.5)
    Pair(a=1, b=0.5)

    """
    __slots__ = ()

    @abc.abstractmethod
    def _pprint_params(self):
        """Return a dictionary of class attributes"""
        raise NotImplementedError

    @staticmethod
    def _format_value(val, room):
        if isinstance(val, str):
            return repr(val)
        if isinstance(val, np.ndarray):
            if val.ndim == 0:
                return repr(float(val))
            strobj = np.array2string(val, precision=4, threshold=7,
                                     edgeitems=2).replace('\n', ',')
            if len(strobj) > room:
                strobj = f'<{val.shape} np.ndarray>'
            return strobj
        if isinstance(val, (float, np.floating)):
            return repr(float(val))
        strobj = str(val)
        if len(strobj) > room:
            # Too long, only show the type name:
            strobj = type(val).__name__
        return strobj

    def __repr__(self):
        """Pretty print class as: ClassName(arg1=val1, arg2=val2)"""
        lwidth = 60
        sorted_params = ODict(sorted(self._pprint_params().items()))
        str_params = self.__class__.__name__ + '('
        # New lines align with the opening parenthesis:
        lindent = len(str_params)
        lc = lindent
        for key, val in sorted_params.items():
            sparam = f"{key}={self._format_value(val, lwidth - lindent)}, "
            if lc + len(sparam) > lwidth and str_params[-1] != '(':
                str_params += '\n' + ' ' * lindent
                lc = lindent
            str_params += sparam
            lc += len(sparam)
        if len(sorted_params) > 0:
            str_params = str_params[:-2]
        return str_params + ')'


class FreezeError(AttributeError):
    """Exception class used to raise when trying to modify a Frozen object

    Classes of type Frozen do not allow attributes to be added or changed
    once the constructor has called ``_freeze``.
    """


class Frozen(object):
    """Frozen

    Immutable-after-construction base class. A subclass sets its attributes
    in ``__init__`` and then calls ``self._freeze()``. Any later attempt to
    set or delete an attribute raises a :py:class:`FreezeError`.

    .. versionadded:: 0.1

    """

    def _freeze(self):
        object.__setattr__(self, '_frozen', True)

    def __setattr__(self, name, value):
        if getattr(self, '_frozen', False):
            cls = self.__class__.__name__
            raise FreezeError(f"Cannot set '{name}': {cls} objects are "
                              f"immutable.")
        object.__setattr__(self, name, value)

    def __delattr__(self, name):
        if getattr(self, '_frozen', False):
            raise FreezeError(f"Cannot delete '{name}': "
                              f"{self.__class__.__name__} objects are "
                              f"immutable.")
        object.__delattr__(self, name)


def freeze_array(arr, dtype=float):
    """Return a read-only float copy of ``arr``

    Parameters
    ----------
    arr : array_like
        Input data
    dtype : data-type, optional
        Output data type

    Returns
    -------
    out : np.ndarray
        A copy of ``arr`` with the ``writeable`` flag cleared
    """
    out = np.array(arr, dtype=dtype)
    out.setflags(write=False)
    return out


class CurvatureVanishes(ValueError):
    """Exception raised when the curvature drops to (or below) the floor

    The Frenet frame is undefined where t'(s) = 0; no frame is guessed there.
    """


class OutOfDomain(ValueError):
    """Exception raised when a curve is evaluated outside its domain"""


class StencilOutOfDomain(OutOfDomain):
    """Exception raised when a finite-difference stencil leaves the support

    .. versionadded:: 0.1

    """


class InvalidParams(ValueError):
    """Exception raised for parameters outside the admissible family"""


class InsufficientSamples(ValueError):
    """Exception raised when too few samples remain for a computation"""


class EmptyTrace(ValueError):
    """Exception raised when statistics are requested of an empty trace"""


class MalformedInput(ValueError):
    """Exception raised for unreadable or inconsistent input data"""
