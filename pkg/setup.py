"""Build script: compiles the optional treewidth kernel extension.

The package works without the extension (a pure-Python fallback is
selected at import time), so a failed compile only prints a warning.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler: fall back to pure Python
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("gridlab._kernels._core",
                   ["src/gridlab/_kernels/_core.pyx"])],
        language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules,
      cmdclass={"build_ext": optional_build_ext})
