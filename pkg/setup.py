"""Build script for the compiled kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time); building it just makes scalar kernel evaluation much faster.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "starradii._kernels_c",
        ["src/starradii/_kernels_c.pyx"],
        include_dirs=[np.get_include()],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level=3),
)
