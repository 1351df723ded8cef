from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install; superpatterns.kernels falls back automatically.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "superpatterns._kernels",
                ["src/superpatterns/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
