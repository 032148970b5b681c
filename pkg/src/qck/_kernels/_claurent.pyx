# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython mirror of qck._kernels.pylaurent.

Same contracts: scalars are dicts int -> nonzero int, inputs unmutated,
outputs zero-free.  Coefficients stay Python ints (they can exceed 64 bits
in long mutation walks); the win is loop and dict-access overhead.
"""

BACKEND = "c"


def ladd(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, n
    for e, c in b.items():
        n = out.get(e, 0) + c
        if n:
            out[e] = n
        else:
            out.pop(e, None)
    return out


def lsub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, n
    for e, c in b.items():
        n = out.get(e, 0) - c
        if n:
            out[e] = n
        else:
            out.pop(e, None)
    return out


def lmul(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, e, n
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            n = out.get(e, 0) + ca * cb
            if n:
                out[e] = n
            else:
                out.pop(e, None)
    return out


def lscale_shift(dict a, object c, object s):
    cdef dict out = {}
    cdef object e, co
    if not c:
        return out
    for e, co in a.items():
        out[e + s] = co * c
    return out


def laddmul_inplace(dict acc, dict a, dict coef_dict):
    cdef object ea, ca, eb, cb, e, n
    for ea, ca in a.items():
        for eb, cb in coef_dict.items():
            e = ea + eb
            n = acc.get(e, 0) + ca * cb
            if n:
                acc[e] = n
            else:
                acc.pop(e, None)
    return acc
