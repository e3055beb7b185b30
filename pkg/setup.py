"""Builds the optional compiled core; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("RZ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("rzf._core", ["src/rzf/_core.pyx"], extra_compile_args=["-O3"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
