"""Build hook: compile the Cython kernel when possible, fall back to pure Python.

The package is fully functional without the extension; qck._kernels selects
the compiled backend at import time if it built.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/qck/_kernels/_claurent.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"qck: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
