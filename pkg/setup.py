#! /usr/bin/env python
# License: 3-clause BSD

import os
import sys

from setuptools import find_packages, setup

# Get version and release info, which is all stored in rshelix/version.py
ver_file = os.path.join('rshelix', 'version.py')
with open(ver_file) as f:
    exec(f.read())

VERSION = __version__

NUMPY_MIN_VERSION = '1.20'
SCIPY_MIN_VERSION = '1.6'
PANDAS_MIN_VERSION = '1.5'
MATPLOTLIB_MIN_VERSION = '3.0.2'
JOBLIB_MIN_VERSION = '0.11'

DISTNAME = 'rshelix'
DESCRIPTION = 'Rectifying slant helices in Euclidean 3-space'
with open('README.rst') as f:
    LONG_DESCRIPTION = f.read()
LICENSE = 'new BSD'
CLASSIFIERS = ['Intended Audience :: Science/Research',
               'Intended Audience :: Developers',
               'License :: OSI Approved',
               'Programming Language :: Python',
               'Topic :: Scientific/Engineering :: Mathematics',
               'Operating System :: POSIX',
               'Operating System :: Unix',
               'Operating System :: MacOS',
               'Operating System :: Microsoft :: Windows',
               'Programming Language :: Python :: 3',
               'Programming Language :: Python :: 3.8',
               'Programming Language :: Python :: 3.9',
               'Programming Language :: Python :: 3.10',
               'Programming Language :: Python :: 3.11',
               ('Programming Language :: Python :: '
                'Implementation :: CPython')
               ]


def setup_package():
    if sys.version_info < (3, 8):
        raise RuntimeError(f"rshelix requires Python 3.8 or later. The "
                           f"current Python version is "
                           f"{sys.version.split()[0]} installed in "
                           f"{sys.executable}.")
    metadata = dict(name=DISTNAME,
                    description=DESCRIPTION,
                    license=LICENSE,
                    version=VERSION,
                    long_description=LONG_DESCRIPTION,
                    classifiers=CLASSIFIERS,
                    packages=find_packages(exclude=['examples', 'examples.*']),
                    zip_safe=False,
                    python_requires=">=3.8",
                    install_requires=[
                        f'numpy>={NUMPY_MIN_VERSION}',
                        f'scipy>={SCIPY_MIN_VERSION}',
                        f'pandas>={PANDAS_MIN_VERSION}',
                        f'matplotlib>={MATPLOTLIB_MIN_VERSION}',
                        f'joblib>={JOBLIB_MIN_VERSION}',
                    ],
                    extras_require={
                        'dev': ('pytest>=5', 'pytest-cov', 'flake8',
                                'hypothesis'),
                    },
                    entry_points={
                        'console_scripts': ['rshelix = rshelix.cli:main'],
                    })
    setup(**metadata)


if __name__ == "__main__":
    setup_package()
