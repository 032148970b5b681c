"""Pure-Python Laurent-dict kernels.

A scalar is a dict mapping integer exponents to nonzero integer
coefficients.  These functions are the arithmetic inner loop of the whole
engine; qck._kernels/_claurent.pyx mirrors them in Cython and either
backend may be active (see qck._kernels.__init__).  Inputs are never
mutated; outputs are zero-free dicts.
"""

BACKEND = "python"


def ladd(a, b):
    out = dict(a)
    for e, c in b.items():
        n = out.get(e, 0) + c
        if n:
            out[e] = n
        else:
            out.pop(e, None)
    return out


def lsub(a, b):
    out = dict(a)
    for e, c in b.items():
        n = out.get(e, 0) - c
        if n:
            out[e] = n
        else:
            out.pop(e, None)
    return out


def lmul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            n = out.get(e, 0) + ca * cb
            if n:
                out[e] = n
            else:
                out.pop(e, None)
    return out


def lscale_shift(a, c, s):
    """c * v^s * a, for integer c and exponent shift s."""
    if not c:
        return {}
    return {e + s: co * c for e, co in a.items()}


def laddmul_inplace(acc, a, coef_dict):
    """acc += a * coef_dict, mutating and returning acc (kernel-internal use)."""
    for ea, ca in a.items():
        for eb, cb in coef_dict.items():
            e = ea + eb
            n = acc.get(e, 0) + ca * cb
            if n:
                acc[e] = n
            else:
                acc.pop(e, None)
    return acc
