"""

rshelix is organized into the following subpackages:

.. autosummary::
    :toctree: _api

    curves
    family
    classify
    indicatrix
    io
    viz
    utils
    cli
"""
import matplotlib as mpl
from os import environ
# Use Agg if there's no display:
# https://stackoverflow.com/a/40931739
if 'inline' not in mpl.get_backend():
    if environ.get('DISPLAY', '') == '':
        mpl.use('Agg')

import logging
from .version import __version__

# Disable Jupyter Notebook handlers
# https://github.com/ipython/ipython/issues/8282
logging.getLogger().handlers = []

logger = logging.getLogger(__name__)
logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.WARNING)
logging.captureWarnings(True)

from . import utils
from . import curves
from . import family
from . import classify
from . import indicatrix
from . import io
from . import viz

__all__ = [
    'classify',
    'curves',
    'family',
    'indicatrix',
    'io',
    'utils',
    'viz',
]
