"""Build script for the optional compiled enumeration kernel.

The package is pure Python except for one hot loop (lattice point
enumeration). If Cython or a C compiler is missing the build falls back
to the interpreted kernel and everything still works.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure Python fallback" % exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure Python fallback" % exc)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available, using pure Python kernel")
        return []
    ext = Extension(
        "hldecomp._enumeration",
        sources=["src/hldecomp/_enumeration.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
