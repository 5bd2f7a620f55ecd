import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PLOTKIN_RS_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("Cython not found; installing the pure-Python kernel only")
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "plotkin_rs._ckernel",
                    ["src/plotkin_rs/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
