"""Build script for the compiled elimination kernel.

The package works without the extension (novikov.kernels falls back to the
pure-Python twin), so a failed compile is tolerated.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("novikov._elim", ["src/novikov/_elim.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
