import os

from setuptools import setup

ext_modules = []
if os.environ.get("QUANDLEKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/quandlekit/_speedups.pyx"], language_level="3"
        )
    except ImportError:
        # Pure-Python fallback is selected at import time; the compiled
        # kernel is an optional accelerator.
        ext_modules = []

setup(ext_modules=ext_modules)
