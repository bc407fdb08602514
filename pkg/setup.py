"""Builds the optional compiled kernels; the package works without them."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("sgcrit.kernels._ckernels", ["src/sgcrit/kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
