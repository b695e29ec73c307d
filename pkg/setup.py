"""Build script: compiles the optional Cython kernel extension.

The extension is marked optional; if Cython or a C compiler is missing the
install proceeds and the package falls back to the NumPy kernels at import
time.  Set FRONTTRACK_PURE=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("FRONTTRACK_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/fronttrack/_kernels_cy.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
        for ext in ext_modules:
            ext.optional = True
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
