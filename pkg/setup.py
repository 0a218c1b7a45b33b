import os

from setuptools import Extension, setup

# The compiled root-finding kernel is optional: the package falls back to the
# pure-Python twin in _aberth.py when the extension is absent.
ext_modules = []
if os.environ.get("SIGNSPECTRA_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "signspectra._aberth_fast",
                    ["src/signspectra/_aberth_fast.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
