"""Build script: compiles the optional C speedup kernel.

The package works without the compiled extension (a NumPy fallback is
selected at import time), so a failed extension build is downgraded to a
warning rather than a fatal error.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "gentropy._kernels._core",
                ["src/gentropy/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError as exc:  # pragma: no cover - exercised only without cython
    warnings.warn(f"building without compiled kernels: {exc}")

setup(ext_modules=ext_modules)
