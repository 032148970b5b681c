"""Exact Laurent scalars over Z in v = q^(1/2).

Every coefficient in the engine lives in Z[v,v^-1] with q = v^2.  Exponents
are stored in v so that the half-integer powers coming from the based
quantum-torus normalization are exact; elements of Z[q,q^-1] are exactly the
scalars whose support is even.  Division is exact polynomial division and
raises when the quotient does not exist in Z[v,v^-1]: correctness proofs in
the engine (Laurent phenomenon, global-basis integrality) are enforced, not
approximated.
"""

from __future__ import annotations

from . import _kernels as K


class NonLaurentResult(ArithmeticError):
    """An exact division left a remainder where theory promised none."""


class QLaurentScalar:
    """Finitely supported map from v-exponents to nonzero integers."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None, *, _raw=None):
        if _raw is not None:
            self.c = _raw
        elif coeffs is None:
            self.c = {}
        else:
            self.c = {int(e): int(v) for e, v in dict(coeffs).items() if int(v) != 0}

    # -- constructors

    @classmethod
    def zero(cls):
        return cls(_raw={})

    @classmethod
    def one(cls):
        return cls(_raw={0: 1})

    @classmethod
    def v_power(cls, n, coeff=1):
        return cls(_raw={int(n): int(coeff)} if coeff else {})

    @classmethod
    def q_power(cls, n, coeff=1):
        return cls.v_power(2 * n, coeff)

    @classmethod
    def q_integer(cls, n):
        """[n]_q = (q^n - q^-n)/(q - q^-1), so [2] = q + q^-1, [-n] = -[n]."""
        if n == 0:
            return cls.zero()
        sign = 1 if n > 0 else -1
        m = abs(n)
        return cls(_raw={2 * k: sign for k in range(-(m - 1), m, 2)})

    @classmethod
    def q_factorial(cls, n):
        out = cls.one()
        for k in range(2, n + 1):
            out = out * cls.q_integer(k)
        return out

    # -- ring structure

    def __add__(self, other):
        return QLaurentScalar(_raw=K.ladd(self.c, other.c))

    def __sub__(self, other):
        return QLaurentScalar(_raw=K.lsub(self.c, other.c))

    def __mul__(self, other):
        if isinstance(other, int):
            return QLaurentScalar(_raw=K.lscale_shift(self.c, other, 0))
        return QLaurentScalar(_raw=K.lmul(self.c, other.c))

    __rmul__ = __mul__

    def __neg__(self):
        return QLaurentScalar(_raw=K.lscale_shift(self.c, -1, 0))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, QLaurentScalar) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def is_zero(self):
        return not self.c

    def v_shift(self, n):
        return QLaurentScalar(_raw=K.lscale_shift(self.c, 1, n))

    def q_shift(self, n):
        return self.v_shift(2 * n)

    def bar(self):
        """The bar involution v -> v^-1 (hence q -> q^-1)."""
        return QLaurentScalar(_raw={-e: v for e, v in self.c.items()})

    # -- structure queries

    def is_q_laurent(self):
        """True when the scalar lies in Z[q,q^-1] (even v-support)."""
        return all(e % 2 == 0 for e in self.c)

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def monomial_exponent(self):
        """For +-v^n scalars return (n, coeff); otherwise None."""
        if len(self.c) == 1:
            e, v = next(iter(self.c.items()))
            return e, v
        return None

    # -- exact division

    def divide_exact(self, other):
        """Exact quotient self/other in Z[v,v^-1]; NonLaurentResult if impossible."""
        if not other.c:
            raise ZeroDivisionError("division by zero scalar")
        if not self.c:
            return QLaurentScalar.zero()
        rem = dict(self.c)
        den = other.c
        dtop = max(den)
        dlead = den[dtop]
        # any exact quotient has support inside [emin, max(self)-dtop]
        emin = min(self.c) - min(den)
        quo = {}
        # long division from the top exponent; each step cancels the top of
        # the remainder, so the candidate quotient exponent strictly drops.
        while rem:
            rtop = max(rem)
            rlead = rem[rtop]
            e = rtop - dtop
            if e < emin or rlead % dlead != 0:
                raise NonLaurentResult(f"inexact division: ({self}) / ({other})")
            c = rlead // dlead
            quo[e] = c
            for de, dc in den.items():
                ne = de + e
                nv = rem.get(ne, 0) - dc * c
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return QLaurentScalar(_raw=quo)

    # -- serialization and display

    def pairs(self, unit="v"):
        """Sorted [[exponent, coeff], ...]; unit='q' demands even support."""
        if unit == "q":
            if not self.is_q_laurent():
                raise NonLaurentResult(f"{self} is not a q-Laurent polynomial")
            return [[e // 2, v] for e, v in sorted(self.c.items())]
        return [[e, v] for e, v in sorted(self.c.items())]

    @classmethod
    def from_pairs(cls, pairs, unit="v"):
        mult = 2 if unit == "q" else 1
        return cls({mult * int(e): int(v) for e, v in pairs})

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for e, v in sorted(self.c.items()):
            if e == 0:
                terms.append(f"{v}")
            elif e % 2 == 0:
                terms.append(f"{v}*q^{e // 2}" if v != 1 else f"q^{e // 2}")
            else:
                terms.append(f"{v}*v^{e}" if v != 1 else f"v^{e}")
        return " + ".join(terms)


ZERO = QLaurentScalar.zero()
ONE = QLaurentScalar.one()
