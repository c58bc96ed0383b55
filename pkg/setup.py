"""Build script.

The compiled kernel is optional: when Cython is unavailable the package
installs without it and `garside.kernel` falls back to the pure-Python
implementation at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "garside._kernel",
                ["src/garside/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
