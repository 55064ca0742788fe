"""Determinants by Gaussian elimination with partial pivoting.

Works on lists of rows holding float, complex, or mpmath numbers alike, so the
same routine serves double and extended precision.
"""

from __future__ import annotations

import math


def det(rows) -> object:
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1.0
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = 1
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0:
            return 0 * a[p][k]
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot = a[k][k]
        result = result * pivot
        for i in range(k + 1, n):
            lam = a[i][k] / pivot
            if lam:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] -= lam * rk[j]
    return sign * result


def hadamard_bound(rows) -> float:
    """Product of row 2-norms; |det| never exceeds it."""
    return math.prod(math.sqrt(sum(abs(x) ** 2 for x in r)) for r in rows)
