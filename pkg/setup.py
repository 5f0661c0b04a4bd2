"""Build script: compiles the kernel extension when Cython is available.

The package is fully functional without the extension (a pure-Python
twin is selected at import), so the build degrades gracefully: no
Cython, no compiler, or a failed compile all fall back to a pure
install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            "src/nlgamma/_backend/_ckernels.pyx",
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
