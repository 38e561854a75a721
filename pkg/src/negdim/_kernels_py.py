"""Reference term-arithmetic kernels for sparse polynomials.

A polynomial is a dict mapping exponent tuples (all the same length) to
nonzero Fraction coefficients.  These three functions are the hot inner
loops of the whole package; negdim._kernels_cy holds a compiled version
with identical semantics, and negdim.kernels picks one at import time.
"""

from fractions import Fraction

BACKEND = "python"


def poly_add(a, b):
    out = dict(a)
    for exps, coeff in b.items():
        acc = out.get(exps)
        if acc is None:
            out[exps] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[exps] = acc
            else:
                del out[exps]
    return out


def poly_sub(a, b):
    out = dict(a)
    for exps, coeff in b.items():
        acc = out.get(exps)
        if acc is None:
            out[exps] = -coeff
        else:
            acc = acc - coeff
            if acc:
                out[exps] = acc
            else:
                del out[exps]
    return out


def poly_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            acc = out.get(key)
            if acc is None:
                out[key] = c
            else:
                acc = acc + c
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    return out


def poly_scale(a, c):
    c = Fraction(c)
    if not c:
        return {}
    return {exps: coeff * c for exps, coeff in a.items()}
