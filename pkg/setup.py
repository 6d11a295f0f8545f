"""Build script for the optional compiled kernel.

The kernel source ``src/diamondcgt/_kernel.py`` is plain Python that Cython
can compile unchanged.  At build time it is copied to ``_ckernel.py`` and
cythonized under that name, so the interpreted module and the compiled twin
coexist in the installed package; ``diamondcgt.kernel`` prefers the compiled
one when it imports.

The extension is strictly optional: builds without Cython or without a C
compiler skip it, and the package runs on the pure-Python kernel.  Set
DIAMONDCGT_NO_EXTENSION=1 to skip the extension on purpose.
"""

import os
import shutil

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain and the like
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print("warning: compiled kernel skipped (%s); using the pure-Python kernel" % (exc,))


def extensions():
    if os.environ.get("DIAMONDCGT_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; using the pure-Python kernel")
        return []
    here = os.path.abspath(os.path.dirname(__file__))
    src = os.path.join(here, "src", "diamondcgt", "_kernel.py")
    twin = os.path.join(here, "src", "diamondcgt", "_ckernel.py")
    shutil.copyfile(src, twin)
    # setuptools demands /-separated paths relative to this directory
    ext = Extension("diamondcgt._ckernel", ["src/diamondcgt/_ckernel.py"])
    return cythonize([ext], language_level="3", quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
