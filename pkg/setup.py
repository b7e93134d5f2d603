"""Build the compiled branch-and-bound kernel.

The extension is optional: if Cython (or a C compiler) is unavailable the
package installs anyway and falls back to the pure-Python kernel at import.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dompack/_bbkernel.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
