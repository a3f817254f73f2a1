"""Build hooks: compile the optional exact-elimination extension when Cython
and a C toolchain are available, fall back to pure Python otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "wpsurf._kernels._celim",
                ["src/wpsurf/_kernels/_celim.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
