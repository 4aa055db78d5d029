"""Build script: compiles the optional sampling-kernel extension.

If Cython is unavailable the package installs without the extension and
`quasim.kernel` falls back to the NumPy implementation at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("quasim._kernel_c", ["src/quasim/_kernel_c.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
