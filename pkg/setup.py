"""Build script for the compiled kernel extension.

The extension is optional at runtime: if the build or import fails, the
package falls back to the pure-Python kernels in ``_kernels_py.py``.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pwreject._ckernels", ["src/pwreject/_ckernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
