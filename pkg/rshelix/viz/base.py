"""`project`, `cone_segments`, `write_svg`, `plot_projection`"""
import logging
import sys
from xml.etree import ElementTree as ET

import numpy as np
import matplotlib.pyplot as plt

from ..io.base import format_float, STDIO

logger = logging.getLogger(__name__)

#: Coordinate indices kept by each projection.
PROJECTIONS = {'xy': (0, 1), 'xz': (0, 2), 'yz': (1, 2)}

#: Width of the SVG picture in pixels.
SVG_WIDTH = 600

SVG_NS = 'http://www.w3.org/2000/svg'


def project(points, projection='xz'):
    """Drop one coordinate of 3-D points

    .. versionadded:: 0.1

    Parameters
    ----------
    points : array-like
        Points of shape (n, 3) or (3,)
    projection : {'xy', 'xz', 'yz'}, optional
        Coordinate plane

    Returns
    -------
    uv : np.ndarray
        Projected points, shape (n, 2)
    """
    if projection not in PROJECTIONS:
        raise ValueError(f'"projection" must be one of '
                         f'{", ".join(PROJECTIONS)}, not "{projection}".')
    points = np.asarray(points, dtype=float)
    if points.shape[-1] != 3:
        raise ValueError(f'"points" must have shape (n, 3), not '
                         f'{points.shape}.')
    return points.reshape(-1, 3)[:, PROJECTIONS[projection]]


def cone_segments(slope_sq, extent):
    """Silhouette of the cone slope_sq (x² + y²) = z² in an xz or yz plane

    Returns the two segments v = +/- sqrt(slope_sq) u for |u| <= extent as an
    array of shape (2, 2, 2): segment, end point, coordinate.
    """
    if not slope_sq > 0:
        raise ValueError(f'"slope_sq" must be positive, not {slope_sq}.')
    rise = np.sqrt(slope_sq) * extent
    return np.array([[[-extent, -rise], [extent, rise]],
                     [[-extent, rise], [extent, -rise]]], dtype=float)


def _bounds(uv):
    lo, hi = uv.min(axis=0), uv.max(axis=0)
    span = hi - lo
    pad = 0.05 * span.max()
    if pad == 0:
        pad = 1.0
    return lo - pad, hi + pad


def _line(parent, start, end, **style):
    return ET.SubElement(parent, 'line', {
        'x1': format_float(start[0]), 'y1': format_float(start[1]),
        'x2': format_float(end[0]), 'y2': format_float(end[1]), **style})


def write_svg(path, uv, cone=None, labels=('u', 'v')):
    """Write projected points as a static SVG 1.1 picture

    The picture holds one ``polyline`` whose points are the data
    coordinates as written by :py:func:`~rshelix.io.format_float`; a
    ``scale(1, -1)`` group flips the vertical axis, and the viewBox spans the
    data (and cone) with a 5% margin. Coordinate axes through the origin are
    drawn when the origin is in view.

    .. versionadded:: 0.1

    Parameters
    ----------
    path : str or path-like
        Output file, or '-' for stdout
    uv : array-like
        Projected points, shape (n, 2) with n >= 1
    cone : float, optional
        Cone slope_sq; draws the silhouette lines v = +/- sqrt(cone) u
    labels : (str, str), optional
        Axis names, stored in the picture's title
    """
    uv = np.asarray(uv, dtype=float).reshape(-1, 2)
    if uv.shape[0] == 0:
        raise ValueError('Nothing to draw: no points.')
    if not np.all(np.isfinite(uv)):
        raise ValueError('Points must be finite.')
    segments = None
    extent = uv.copy()
    if cone is not None:
        segments = cone_segments(cone, np.max(np.abs(uv[:, 0])))
        extent = np.vstack((extent, segments.reshape(-1, 2)))
    lo, hi = _bounds(extent)
    width, height = hi - lo
    root = ET.Element('svg', {
        'xmlns': SVG_NS, 'version': '1.1',
        'width': str(SVG_WIDTH),
        'height': str(max(1, int(round(SVG_WIDTH * height / width)))),
        'viewBox': ' '.join(format_float(v) for v in
                            (lo[0], -hi[1], width, height))})
    ET.SubElement(root, 'title').text = f'{labels[0]}{labels[1]} projection'
    group = ET.SubElement(root, 'g', {'transform': 'scale(1,-1)'})
    stroke = {'stroke-width': '1', 'vector-effect': 'non-scaling-stroke'}
    if lo[1] <= 0 <= hi[1]:
        _line(group, (lo[0], 0), (hi[0], 0), stroke='#999999', **stroke)
    if lo[0] <= 0 <= hi[0]:
        _line(group, (0, lo[1]), (0, hi[1]), stroke='#999999', **stroke)
    if segments is not None:
        for start, end in segments:
            _line(group, start, end, stroke='#1f77b4',
                  **{'stroke-dasharray': '4 3'}, **stroke)
    ET.SubElement(group, 'polyline', {
        'points': ' '.join(f'{format_float(u)},{format_float(v)}'
                           for u, v in uv),
        'fill': 'none', 'stroke': '#000000', **stroke})
    tree = ET.ElementTree(root)
    if str(path) == STDIO:
        sys.stdout.write(ET.tostring(root, encoding='unicode') + '\n')
    else:
        tree.write(path, encoding='utf-8', xml_declaration=True)
        logger.debug(f'Wrote {uv.shape[0]}-point polyline to {path}')


def plot_projection(points, projection='xz', cone=None, ax=None, color='k',
                    text_size=10):
    """Plot a 2-D projection of a space curve on a Matplotlib axis

    .. versionadded:: 0.1

    Parameters
    ----------
    points : array-like
        Points of shape (n, 3)
    projection : {'xy', 'xz', 'yz'}, optional
        Coordinate plane
    cone : float, optional
        Cone slope_sq; draws the silhouette lines (xz and yz only)
    ax : matplotlib.axes.Axes, optional
        Matplotlib axis
    color : str, optional
        Line color
    text_size : int, optional
        Font size of the axis labels

    Returns
    -------
    ax : matplotlib.axes.Axes
    """
    uv = project(points, projection)
    if cone is not None and projection == 'xy':
        raise ValueError('The cone silhouette exists in the xz and yz '
                         'projections only.')
    if ax is None:
        ax = plt.gca()
    ax.plot(uv[:, 0], uv[:, 1], color=color, linewidth=1.5)
    if cone is not None:
        for segment in cone_segments(cone, np.max(np.abs(uv[:, 0]))):
            ax.plot(segment[:, 0], segment[:, 1], '--', color='C0',
                    linewidth=1)
    ax.set_xlabel(projection[0], fontsize=text_size)
    ax.set_ylabel(projection[1], fontsize=text_size)
    ax.set_aspect('equal', adjustable='datalim')
    return ax
