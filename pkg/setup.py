from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package installs anyway and cpfn.kernels falls back to the pure-Python
# implementation.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("cpfn._ckernel", ["src/cpfn/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
