# cython: language_level=3
"""Compiled term-arithmetic kernels.

Same contract as negdim._kernels_py.  The multiply kernel accumulates
coefficients as raw numerator/denominator integer pairs and normalises
once per output term, which avoids a gcd per intermediate addition.
"""

from fractions import Fraction

from cpython.tuple cimport PyTuple_GET_SIZE, PyTuple_GET_ITEM, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

BACKEND = "cython"


cdef inline tuple _tuple_add(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(ea)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = (<object>PyTuple_GET_ITEM(ea, i)) + (<object>PyTuple_GET_ITEM(eb, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def poly_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object exps, coeff, acc
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


def poly_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object exps, coeff, acc
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


def poly_mul(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    # b flattened to (exponents, numerator, denominator) triples
    cdef list bitems = []
    cdef object eb, cb
    for eb, cb in b.items():
        bitems.append((eb, cb.numerator, cb.denominator))

    cdef dict acc = {}
    cdef tuple ea, key, trip
    cdef object ca, na, da, nb, db, cell
    cdef object n, d, pn, pd
    for ea, ca in a.items():
        na = ca.numerator
        da = ca.denominator
        for trip in bitems:
            key = _tuple_add(ea, <tuple>PyTuple_GET_ITEM(trip, 0))
            nb = <object>PyTuple_GET_ITEM(trip, 1)
            db = <object>PyTuple_GET_ITEM(trip, 2)
            n = na * nb
            d = da * db
            cell = acc.get(key)
            if cell is None:
                acc[key] = [n, d]
            else:
                pn = (<list>cell)[0]
                pd = (<list>cell)[1]
                if pd == d:
                    (<list>cell)[0] = pn + n
                else:
                    (<list>cell)[0] = pn * d + n * pd
                    (<list>cell)[1] = pd * d
    cdef dict out = {}
    cdef object f
    for key, cell in acc.items():
        f = Fraction((<list>cell)[0], (<list>cell)[1])
        if f:
            out[key] = f
    return out


def poly_scale(dict a, c):
    c = Fraction(c)
    if not c:
        return {}
    cdef dict out = {}
    cdef object exps, coeff
    for exps, coeff in a.items():
        out[exps] = coeff * c
    return out
