"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); compilation failures therefore downgrade to a warning
instead of aborting the install.  Set GRIDLINE_SKIP_NATIVE=1 to skip the
extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, broken toolchain, ...
            print(f"warning: native kernels not built ({exc}); "
                  "falling back to pure-Python kernels", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name}: {exc}", file=sys.stderr)


def extensions():
    if os.environ.get("GRIDLINE_SKIP_NATIVE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; native kernels not built",
              file=sys.stderr)
        return []
    return cythonize(
        [
            Extension(
                "gridline._kernels._native",
                ["src/gridline/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
