"""Build script. The compiled kernel extension is optional: when Cython or a
C compiler is unavailable the package installs anyway and falls back to the
pure-Python kernels at import time."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ARBOR_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("arbor._speed", ["src/arbor/_speed.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
