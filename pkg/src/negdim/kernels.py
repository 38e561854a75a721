"""Kernel backend selection.

Prefers the compiled kernels when the extension has been built, otherwise
falls back to the pure-Python reference implementation.  The environment
variable NEGDIM_KERNELS=python|cython forces a backend (the benchmark and
the cross-checking tests use set_backend directly).
"""

import os

from negdim import _kernels_py

_backends = {"python": _kernels_py}
try:
    from negdim import _kernels_cy

    _backends["cython"] = _kernels_cy
except ImportError:
    _kernels_cy = None

_forced = os.environ.get("NEGDIM_KERNELS")
if _forced:
    if _forced not in _backends:
        raise ImportError(f"NEGDIM_KERNELS={_forced!r} is not available; "
                          f"choices: {sorted(_backends)}")
    _active = _backends[_forced]
else:
    _active = _backends.get("cython", _kernels_py)


def available_backends():
    return sorted(_backends)


def active_backend():
    return _active.BACKEND


def set_backend(name):
    """Switch kernels at runtime; returns the previous backend name."""
    global _active
    if name not in _backends:
        raise ValueError(f"unknown kernel backend {name!r}; "
                         f"choices: {sorted(_backends)}")
    previous = _active.BACKEND
    _active = _backends[name]
    return previous


def poly_add(a, b):
    return _active.poly_add(a, b)


def poly_sub(a, b):
    return _active.poly_sub(a, b)


def poly_mul(a, b):
    return _active.poly_mul(a, b)


def poly_scale(a, c):
    return _active.poly_scale(a, c)
