"""Projections of space curves: SVG files and Matplotlib plots

.. autosummary::
    :toctree: _api

    base

"""

from .base import (project, cone_segments, write_svg, plot_projection,
                   PROJECTIONS)

__all__ = [
    'cone_segments',
    'plot_projection',
    'project',
    'PROJECTIONS',
    'write_svg',
]
