"""Build script.  The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package installs anyway and falls back to the
NumPy implementation at import time."""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tilewave._modes_cy",
                ["src/tilewave/_modes_cy.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print(f"tilewave: skipping compiled kernels ({exc}); NumPy fallback will be used")

setup(ext_modules=ext_modules)
