"""Builds the optional compiled kernels; the package falls back to pure Python without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("WRTWIST_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(["src/wrtwist/_kernels.pyx"], language_level=3, quiet=True)
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
