"""Build script: compiles the optional rank kernel when Cython is around.

The package is fully functional without it; the pure-Python kernels are
picked up automatically.  Build the accelerator in place with

    python setup.py build_ext --inplace
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "edgechains._fastrank",
                sources=["src/edgechains/_fastrank.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
