"""Build script: compiles the optional word-kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so any build failure here falls back to a source-only install.
Set AVOIDCOL_SKIP_EXT=1 to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("AVOIDCOL_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "avoidcol._ckernels",
                    ["src/avoidcol/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
