"""`format_float`, `write_csv`, `write_curve_csv`, `write_trace_csv`,
   `read_csv`, `read_curve_csv`, `read_points_csv`, `to_jsonable`,
   `write_json`"""
import json
import logging
import sys

import numpy as np
import pandas as pd

from ..curves.samples import CurveSamples
from ..utils.base import MalformedInput

logger = logging.getLogger(__name__)

#: Column names of a curve file.
CURVE_COLUMNS = ('s', 'x', 'y', 'z')

#: Column names of an indicatrix file.
TRACE_COLUMNS = ('s', 'ux', 'uy', 'uz')

#: Path that stands for stdin/stdout.
STDIO = '-'


def format_float(value):
    """Shortest round-trip representation of a float

    Integral values drop the trailing '.0' and negative zero prints as '0',
    so identical data always produce identical text.

    .. versionadded:: 0.1

    Parameters
    ----------
    value : float
        A finite number

    Returns
    -------
    text : str
        ``float(text) == value`` (up to the sign of zero)
    """
    value = float(value)
    if value == 0:
        return '0'
    text = repr(value)
    if text.endswith('.0'):
        text = text[:-2]
    return text


def write_csv(path, columns):
    """Write equally long float columns as CSV with LF line endings

    .. versionadded:: 0.1

    Parameters
    ----------
    path : str or path-like
        Output file, or '-' for stdout
    columns : dict
        Ordered mapping from column name to a 1-D array
    """
    table = {}
    for name, values in columns.items():
        values = np.asarray(values, dtype=float).reshape(-1)
        if not np.all(np.isfinite(values)):
            raise ValueError(f'Column "{name}" contains non-finite values.')
        table[name] = [format_float(v) for v in values]
    sizes = {len(values) for values in table.values()}
    if len(sizes) > 1:
        raise ValueError(f'Columns must have equal length, not {sizes}.')
    df = pd.DataFrame(table)
    if str(path) == STDIO:
        df.to_csv(sys.stdout, index=False, lineterminator='\n')
    else:
        df.to_csv(path, index=False, lineterminator='\n')
        logger.debug(f'Wrote {len(df)} rows to {path}')


def write_curve_csv(path, s, points):
    """Write arc length and positions with header ``s,x,y,z``"""
    points = np.asarray(points, dtype=float).reshape(-1, 3)
    write_csv(path, dict(zip(CURVE_COLUMNS, (s, *points.T))))


def write_trace_csv(path, trace):
    """Write a :py:class:`~rshelix.indicatrix.SphericalTrace` with header
    ``s,ux,uy,uz``"""
    write_csv(path, dict(zip(TRACE_COLUMNS, (trace.s, *trace.points.T))))


def read_csv(path, columns):
    """Read named float columns from a CSV file

    .. versionadded:: 0.1

    Parameters
    ----------
    path : str or path-like
        Input file, or '-' for stdin
    columns : sequence of str
        Columns that must be present; others are ignored

    Returns
    -------
    table : dict
        Column name to float array, in the order of ``columns``

    Raises
    ------
    MalformedInput
        If the file is empty or unparsable, a column is missing, or a value
        is not a finite number
    """
    source = sys.stdin if str(path) == STDIO else path
    try:
        df = pd.read_csv(source, skipinitialspace=True,
                         float_precision='round_trip')
    except pd.errors.EmptyDataError:
        raise MalformedInput(f'{path} is empty.')
    except pd.errors.ParserError as e:
        raise MalformedInput(f'Cannot parse {path}: {e}')
    missing = [name for name in columns if name not in df.columns]
    if missing:
        raise MalformedInput(f'{path} lacks the column(s) '
                             f'{", ".join(missing)}; found '
                             f'{", ".join(map(str, df.columns))}.')
    table = {}
    for name in columns:
        try:
            values = pd.to_numeric(df[name], errors='raise')
        except (ValueError, TypeError):
            raise MalformedInput(f'Column "{name}" of {path} contains '
                                 f'non-numeric values.')
        values = values.to_numpy(dtype=float)
        if not np.all(np.isfinite(values)):
            row = int(np.argmax(~np.isfinite(values)))
            raise MalformedInput(f'Column "{name}" of {path} has a missing '
                                 f'or non-finite value in data row '
                                 f'{row + 1}.')
        table[name] = values
    logger.debug(f'Read {len(df)} rows from {path}')
    return table


def read_curve_csv(path, tolerances=None):
    """Read an ``s,x,y,z`` file into :py:class:`~rshelix.curves.CurveSamples`

    .. versionadded:: 0.1

    Raises
    ------
    MalformedInput
        On any of the conditions of :py:func:`read_csv`, an empty table, or
        samples that are not ordered unit-speed samples
    """
    table = read_csv(path, CURVE_COLUMNS)
    if table['s'].size == 0:
        raise MalformedInput(f'{path} has no data rows.')
    points = np.stack([table[name] for name in CURVE_COLUMNS[1:]], axis=-1)
    return CurveSamples(table['s'], points, tolerances=tolerances)


def read_points_csv(path):
    """Read 3-D points from ``x,y,z`` or ``ux,uy,uz`` columns

    Returns an array of shape (n, 3) with n >= 1.
    """
    try:
        table = read_csv(path, CURVE_COLUMNS[1:])
        names = CURVE_COLUMNS[1:]
    except MalformedInput as e:
        if 'lacks the column' not in str(e):
            raise
        table = read_csv(path, TRACE_COLUMNS[1:])
        names = TRACE_COLUMNS[1:]
    points = np.stack([table[name] for name in names], axis=-1)
    if points.shape[0] == 0:
        raise MalformedInput(f'{path} has no data rows.')
    return points


def to_jsonable(obj):
    """Convert numpy scalars and arrays to plain Python; NaN becomes None"""
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        return obj if np.isfinite(obj) else None
    return obj


def write_json(path, data):
    """Write ``data`` as indented JSON, keys in insertion order

    .. versionadded:: 0.1

    Parameters
    ----------
    path : str or path-like
        Output file, or '-' for stdout
    data : dict
        May contain numpy types
    """
    text = json.dumps(to_jsonable(data), indent=2, allow_nan=False) + '\n'
    if str(path) == STDIO:
        sys.stdout.write(text)
    else:
        with open(path, 'w', newline='\n') as f:
            f.write(text)
        logger.debug(f'Wrote JSON report to {path}')
