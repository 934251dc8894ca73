"""Build script: compiles the optional fast arithmetic kernel.

The package works without the extension (a pure-Python kernel is selected
at import time); set GQ_NO_EXT=1 to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GQ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "greenquadrics._kernel._cyquad",
                    ["src/greenquadrics/_kernel/_cyquad.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
