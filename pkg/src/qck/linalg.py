"""Fraction-free linear solving over the Laurent ring.

Bareiss elimination keeps every intermediate entry a genuine subdeterminant,
so the division built into the pivoting step is exact over any integral
domain; back-substitution divides by pivots and succeeds exactly when the
corresponding solution coordinate lies in the ring.  Failures are reported,
never approximated.
"""

from __future__ import annotations

from .laurent import NonLaurentResult, QLaurentScalar


class NoSolution(ArithmeticError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NonUniqueSolution(ArithmeticError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def solve_exact(rows, rhs):
    """Solve A x = b for x over Z[v,v^-1].

    rows: list of lists of QLaurentScalar (m x n, m >= n expected);
    rhs: list of QLaurentScalar.  Returns the unique solution vector.
    Raises NoSolution (inconsistent), NonUniqueSolution (rank < n), or
    NonLaurentResult (unique solution exists but leaves the ring).
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    prev = QLaurentScalar.one()
    piv_rows = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            raise NonUniqueSolution(f"no pivot in column {col}", witness={"column": col})
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            for j in range(col + 1, n + 1):
                num = a[r][col] * a[i][j] - a[i][col] * a[r][j]
                a[i][j] = num.divide_exact(prev)
            a[i][col] = QLaurentScalar.zero()
        prev = a[r][col]
        piv_rows.append((r, col))
        r += 1
    # consistency of the remaining rows
    for i in range(r, m):
        if a[i][n]:
            raise NoSolution(f"inconsistent row {i}", witness={"row": i})
    x = [QLaurentScalar.zero()] * n
    for row, col in reversed(piv_rows):
        acc = a[row][n]
        for j in range(col + 1, n):
            acc = acc - a[row][j] * x[j]
        x[col] = acc.divide_exact(a[row][col])
    return x
