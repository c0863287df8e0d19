"""Build script: compiles the row-reduction kernel when Cython and a C
toolchain are available. The package works without the extension (a numpy
fallback is selected at import), so build failures here are non-fatal for
source installs done with --no-build-isolation plus a prebuilt environment,
but pip builds will surface real compiler errors."""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "apolarity_lab._rref_c",
        ["src/apolarity_lab/_rref_c.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
