import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TSCHIRN_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("tschirn._speedups", ["src/tschirn/_speedups.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
