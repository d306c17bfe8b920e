"""Build script: compiles the optional rotation-scan extension.

The package is fully functional without the extension (a pure-Python
twin of the scan kernel is selected at import time); the compiled
kernel is what makes the exhaustive embedding searches fast.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: building the scan extension failed ({exc}); "
                  "using the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} failed to compile ({exc}); "
                  "using the pure-Python kernel")


import os

try:
    from Cython.Build import cythonize
    pyx = "src/freeness/_scan_c.pyx"
    if os.path.exists(pyx):
        extensions = cythonize([Extension("freeness._scan_c", [pyx])],
                               language_level="3")
    else:
        extensions = []
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
