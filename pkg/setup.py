from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build without the compiled kernels; the numpy fallback is used
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("srgkit._kernels", ["src/srgkit/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
