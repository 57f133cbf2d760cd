import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/isgkit/_fastcore.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # no Cython or no compiler: pure-Python backend still works
    print(f"isgkit: building without compiled kernels ({exc})", file=sys.stderr)

for ext in ext_modules:
    ext.optional = True

setup(ext_modules=ext_modules)
