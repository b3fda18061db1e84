"""Build script for the optional compiled enumeration kernel.

The package is pure Python except for one hot loop (exhaustive codeword
enumeration).  If Cython or a C compiler is unavailable the extension is
skipped and the pure-Python fallback in framecodes._bitkernel_py is used.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "framecodes._bitkernel",
                ["src/framecodes/_bitkernel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
