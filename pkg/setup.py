import os

import numpy
from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BOSONSPIN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bosonspin._kernels",
                    ["src/bosonspin/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: install with the pure-python kernels only
        ext_modules = []

setup(ext_modules=ext_modules)
