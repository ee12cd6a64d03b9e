"""Build script for the optional compiled kernels.

The package is pure Python except for fuzzysna.kernels._bottleneck_cy, a
Cython translation of the bottleneck-path kernels. The extension is a
strict accelerator: if Cython or a C compiler is unavailable the build
degrades to the pure-Python kernels with identical results.
"""

import logging

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

log = logging.getLogger(__name__)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        log.warning("Cython not available; building without compiled kernels")
        return []
    return cythonize(
        [
            Extension(
                "fuzzysna.kernels._bottleneck_cy",
                ["src/fuzzysna/kernels/_bottleneck_cy.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


class optional_build_ext(build_ext):
    """Let the install proceed when the toolchain cannot build the extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken headers, ...
            log.warning("compiled kernels skipped: %s", exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            log.warning("compiled kernels skipped: %s", exc)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
