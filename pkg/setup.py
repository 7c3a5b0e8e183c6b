import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BOLFORGE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bolforge.search._kernel_cy",
                    ["src/bolforge/search/_kernel_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        # No Cython available: install the pure-Python kernel only.
        ext_modules = []

setup(ext_modules=ext_modules)
