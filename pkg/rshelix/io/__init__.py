"""CSV and JSON files of curves, indicatrices and reports

.. autosummary::
    :toctree: _api

    base

"""
from .base import (format_float, write_csv, write_curve_csv, write_trace_csv,
                   read_csv, read_curve_csv, read_points_csv, to_jsonable,
                   write_json, CURVE_COLUMNS, TRACE_COLUMNS)

__all__ = [
    'CURVE_COLUMNS',
    'format_float',
    'read_csv',
    'read_curve_csv',
    'read_points_csv',
    'to_jsonable',
    'TRACE_COLUMNS',
    'write_csv',
    'write_curve_csv',
    'write_json',
    'write_trace_csv',
]
