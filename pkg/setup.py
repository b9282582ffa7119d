"""Build script: compiles the stepping-kernel extension when Cython and a C
compiler are available.  The package falls back to a pure-Python loop module
at import time if the extension is absent, so a failed extension build is not
fatal (set MALALAB_SKIP_NATIVE=1 to skip it deliberately).

The extension is compiled with strict IEEE semantics (no -ffast-math): the
pure-Python fallback must produce bit-identical trajectories.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MALALAB_SKIP_NATIVE") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "malalab._native",
                    ["src/malalab/_native.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
