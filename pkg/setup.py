import os

from setuptools import setup

ext_modules = []
if not os.environ.get("OPFOLD_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/opfold/_corefast.pyx"],
            compiler_directives={"language_level": 3},
        )
        for ext in ext_modules:
            ext.extra_compile_args = ["-O3"]
    except ImportError:
        # pure-Python fallback is selected at import time
        ext_modules = []

setup(ext_modules=ext_modules)
