"""Build hook: compiles the optional accelerated term-arithmetic kernel.

The package is pure Python; the compiled module is a drop-in replacement for
negdim._kernels_py that the kernel selector picks up when present.  If Cython
(or a C compiler) is unavailable the extension is simply skipped and the
fallback kernel is used at runtime.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("negdim._kernels_cy", ["src/negdim/_kernels_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
