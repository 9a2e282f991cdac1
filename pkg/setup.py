"""Build script: compiles the optional C kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), but the exhaustive enumeration paths are orders of magnitude
faster with it.  If Cython or a C compiler is unavailable the build degrades
to a pure-Python install instead of failing.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/monocomp/_fastkern.pyx"],
        language_level="3",
    )
except Exception as exc:  # no Cython / no compiler: install pure
    print(f"monocomp: building without C kernels ({exc!r})")
    ext_modules = []

setup(ext_modules=ext_modules)
