"""Build script: compiles the word-matching kernel when Cython and a C
compiler are available, and falls back to the pure-Python twin otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/qgal/_kernel.pyx"], language_level=3, quiet=True)
except Exception as e:  # no Cython or no compiler: pure-Python fallback
    print(f"skipping compiled kernel ({e}); pure-Python kernel will be used")

setup(ext_modules=ext_modules)
