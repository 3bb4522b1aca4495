"""Build the optional compiled search kernel.

The package works without it: rep132.kernels falls back to the pure-Python
kernel when the extension is missing or fails to build.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rep132._kernel",
                ["src/rep132/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
