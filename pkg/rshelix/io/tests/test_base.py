import json

import numpy as np
import pytest
import numpy.testing as npt

from rshelix.io import (format_float, write_csv, write_curve_csv,
                        write_trace_csv, read_csv, read_curve_csv,
                        read_points_csv, to_jsonable, write_json)
from rshelix.curves import CircularHelix, CurveSamples, sample_curve
from rshelix.indicatrix import indicatrix
from rshelix.utils import MalformedInput


@pytest.mark.parametrize('value,text', [(0.0, '0'), (-0.0, '0'), (3.0, '3'),
                                        (-3.0, '-3'), (0.1, '0.1'),
                                        (1 / 3, '0.3333333333333333'),
                                        (1e-20, '1e-20'),
                                        (2.5e300, '2.5e+300'),
                                        (np.float64(-0.25), '-0.25')])
def test_format_float(value, text):
    npt.assert_equal(format_float(value), text)
    npt.assert_equal(float(format_float(value)), value)


def test_write_csv(tmp_path):
    path = tmp_path / 'table.csv'
    write_csv(path, {'a': [0, 0.5], 'b': np.array([-1.0, 1 / 3])})
    npt.assert_equal(path.read_bytes(),
                     b'a,b\n0,-1\n0.5,0.3333333333333333\n')
    with pytest.raises(ValueError):
        write_csv(path, {'a': [0, 1], 'b': [0]})
    with pytest.raises(ValueError):
        write_csv(path, {'a': [np.nan]})


def test_write_csv_stdout(capsys):
    write_csv('-', {'s': [1, 2]})
    npt.assert_equal(capsys.readouterr().out, 's\n1\n2\n')


def test_curve_csv(tmp_path):
    path = tmp_path / 'helix.csv'
    samples = sample_curve(CircularHelix(1, 2), n=50, with_frenet=False)
    write_curve_csv(path, samples.s, samples.points)
    npt.assert_equal(path.read_text().splitlines()[0], 's,x,y,z')
    loaded = read_curve_csv(path)
    npt.assert_equal(isinstance(loaded, CurveSamples), True)
    npt.assert_equal(loaded.s, samples.s)
    npt.assert_equal(loaded.points, samples.points)
    npt.assert_equal(loaded.backend, 'sampled')
    # Writing twice gives identical bytes:
    other = tmp_path / 'again.csv'
    write_curve_csv(other, loaded.s, loaded.points)
    npt.assert_equal(other.read_bytes(), path.read_bytes())


def test_trace_csv(tmp_path):
    path = tmp_path / 'trace.csv'
    trace = indicatrix(CircularHelix(1, 2), 'binormal', n=10)
    write_trace_csv(path, trace)
    table = read_csv(path, ('s', 'ux', 'uy', 'uz'))
    npt.assert_equal(list(table), ['s', 'ux', 'uy', 'uz'])
    npt.assert_equal(table['uz'], trace.points[:, 2])
    npt.assert_equal(read_points_csv(path), trace.points)


def test_read_csv_errors(tmp_path):
    path = tmp_path / 'bad.csv'
    path.write_text('')
    with pytest.raises(MalformedInput):
        read_curve_csv(path)
    path.write_text('s,x,y,z\n')
    with pytest.raises(MalformedInput):
        read_curve_csv(path)
    with pytest.raises(MalformedInput):
        read_points_csv(path)
    path.write_text('s,x,y\n0,1,2\n')
    with pytest.raises(MalformedInput, match='lacks the column'):
        read_curve_csv(path)
    path.write_text('s,x,y,z\n0,1,2,3\n1,a,2,3\n')
    with pytest.raises(MalformedInput, match='non-numeric'):
        read_curve_csv(path)
    path.write_text('s,x,y,z\n0,1,2,3\n1,,2,3\n')
    with pytest.raises(MalformedInput, match='row 2'):
        read_curve_csv(path)
    # Samples must be ordered and unit speed:
    path.write_text('s,x,y,z\n1,0,0,0\n0,0,0,0\n')
    with pytest.raises(MalformedInput):
        read_curve_csv(path)
    path.write_text('s,x,y,z\n0,0,0,0\n1,2,0,0\n')
    with pytest.raises(MalformedInput):
        read_curve_csv(path)
    with pytest.raises(OSError):
        read_curve_csv(tmp_path / 'missing.csv')


def test_read_points_csv(tmp_path):
    path = tmp_path / 'one.csv'
    path.write_text('s,x,y,z\n0,1,2,3\n')
    npt.assert_equal(read_points_csv(path), [[1, 2, 3]])
    # No arc-length column needed:
    path.write_text('x,y,z\n1,2,3\n4,5,6\n')
    npt.assert_equal(read_points_csv(path).shape, (2, 3))


def test_to_jsonable():
    data = {'a': np.float64(0.5), 'b': np.int64(3), 'c': np.bool_(True),
            'd': np.array([1.0, 2.0]), 'e': np.nan, 'f': ('x', None),
            1: {'g': [np.float32(0.25)]}}
    out = to_jsonable(data)
    npt.assert_equal(out, {'a': 0.5, 'b': 3, 'c': True, 'd': [1.0, 2.0],
                           'e': None, 'f': ['x', None],
                           '1': {'g': [0.25]}})
    npt.assert_equal(type(out['c']), bool)
    npt.assert_equal(type(out['b']), int)


def test_write_json(tmp_path, capsys):
    path = tmp_path / 'report.json'
    data = {'verdict': np.bool_(False), 'slant': {'sigma_mean': np.nan},
            'alpha': 1}
    write_json(path, data)
    text = path.read_text()
    npt.assert_equal(text.endswith('}\n'), True)
    npt.assert_equal(list(json.loads(text)), ['verdict', 'slant', 'alpha'])
    npt.assert_equal(json.loads(text)['slant']['sigma_mean'], None)
    write_json('-', data)
    npt.assert_equal(capsys.readouterr().out, text)
