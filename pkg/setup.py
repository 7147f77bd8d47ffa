import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "ehlin._kernels_cy",
                ["src/ehlin/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # no Cython available: the package still works off the pure-Python kernels
    extensions = []

setup(ext_modules=extensions)
