"""`CheckResult`, `VerificationReport`"""
import numpy as np

from ..utils.base import Frozen, PrettyPrint


class CheckResult(Frozen, PrettyPrint):
    """One named check: a residual compared against a tolerance

    .. versionadded:: 0.1

    Parameters
    ----------
    name : str
        Check name
    residual : float
        Measured residual; NaN never passes
    tolerance : float
        Largest acceptable residual
    passed : bool, optional
        Overrides ``residual <= max(tolerance, floor)`` for checks with an
        additional or pointwise condition
    floor : float, optional
        Rounding floor of the residual in double precision, for checks whose
        tolerance is not reachable everywhere

    """

    def __init__(self, name, residual, tolerance, passed=None, floor=None):
        self.name = str(name)
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.floor = None if floor is None else float(floor)
        if passed is None:
            bound = max(self.tolerance, self.floor or 0.0)
            passed = np.isfinite(self.residual) and self.residual <= bound
        self.passed = bool(passed)
        self._freeze()

    def _pprint_params(self):
        return {'name': self.name, 'residual': self.residual,
                'tolerance': self.tolerance, 'floor': self.floor,
                'passed': self.passed}

    def to_dict(self):
        out = {'name': self.name, 'residual': self.residual,
               'tolerance': self.tolerance}
        if self.floor is not None:
            out['floor'] = self.floor
        out['pass'] = self.passed
        return out


class VerificationReport(Frozen, PrettyPrint):
    """Pass/fail verdicts of a set of checks

    The report passes overall iff every check passes.

    .. versionadded:: 0.1

    Parameters
    ----------
    checks : list of :py:class:`~rshelix.classify.CheckResult`
        At least one check, names must be unique
    provenance : dict, optional
        Where the data came from (parameters, grid, backend, version)
    summary : dict, optional
        Additional results listed first when serialized

    """

    def __init__(self, checks, provenance=None, summary=None):
        checks = tuple(checks)
        if len(checks) == 0:
            raise ValueError('A report needs at least one check.')
        names = [check.name for check in checks]
        if len(set(names)) != len(names):
            raise ValueError(f'Check names must be unique: {names}.')
        self.checks = checks
        self.provenance = dict(provenance or {})
        self.summary = dict(summary or {})
        self._freeze()

    def _pprint_params(self):
        return {'overall': self.overall, 'failed': self.failed}

    @property
    def overall(self):
        return all(check.passed for check in self.checks)

    @property
    def failed(self):
        """Names of the failing checks, in order"""
        return [check.name for check in self.checks if not check.passed]

    @property
    def names(self):
        return [check.name for check in self.checks]

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(f'No check named "{name}".')

    def __len__(self):
        return len(self.checks)

    def to_dict(self):
        """Ordered dict form: summary, overall, checks, provenance"""
        out = dict(self.summary)
        out['overall'] = self.overall
        out['checks'] = [check.to_dict() for check in self.checks]
        out['provenance'] = self.provenance
        return out

    def format_table(self):
        """Plain-text table, one check per line"""
        width = max(len(name) for name in self.names)
        lines = []
        for check in self.checks:
            status = 'ok' if check.passed else 'FAIL'
            floor = ('' if check.floor is None else
                     f'  floor {check.floor:8.1e}')
            lines.append(f'{check.name:<{width}}  {check.residual:11.3e}  '
                         f'<= {check.tolerance:8.1e}{floor}  {status}')
        lines.append(f'{"overall":<{width}}  '
                     f'{"PASS" if self.overall else "FAIL"}')
        return '\n'.join(lines)
