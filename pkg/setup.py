"""Builds the optional compiled kernel; the package works without it."""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HECKECHAR_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("heckechar._kernel", ["src/heckechar/_kernel.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
