"""Build script: compiles the Cython search kernel when possible.

The package is fully functional without the extension (a pure-Python
twin is selected at import time), so a failing compile only costs speed.
"""

import setuptools

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [setuptools.Extension(
            "ecwidth._kernel._core",
            sources=["src/ecwidth/_kernel/_core.pyx"],
            extra_compile_args=["-O2"],
        )],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"ecwidth: building without compiled kernel ({exc})")

setuptools.setup(ext_modules=ext_modules)
