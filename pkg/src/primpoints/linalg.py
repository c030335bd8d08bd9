"""Small exact linear algebra over Q used by the kernel computations.

Matrices are lists of rows of Fractions.  Nothing here is performance
critical beyond keeping the elimination exact; rows get rescaled to
integers first so Fraction normalization cost stays bounded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd


def _int_row(row):
    den = reduce(lambda a, c: a * c.denominator // gcd(a, c.denominator), row, 1)
    ints = [int(c * den) for c in row]
    content = reduce(gcd, (abs(v) for v in ints), 0)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def rank(rows) -> int:
    work = [_int_row([Fraction(c) for c in row]) for row in rows]
    work = [r for r in work if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rk = 0
    col = 0
    while col < ncols and rk < len(work):
        pivot = next((i for i in range(rk, len(work)) if work[i][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        pv = work[rk][col]
        for i in range(rk + 1, len(work)):
            if work[i][col]:
                a, b = work[i][col], pv
                work[i] = [b * x - a * y for x, y in zip(work[i], work[rk])]
                content = reduce(gcd, (abs(v) for v in work[i]), 0)
                if content > 1:
                    work[i] = [v // content for v in work[i]]
        rk += 1
        col += 1
    return rk


def kernel_basis(rows, ncols):
    """Basis of {v : M v = 0} as Fraction vectors, reduced-echelon shaped.

    Each basis vector has its first nonzero coordinate equal to 1, and the
    basis is ordered by the position of that pivot; this makes downstream
    output deterministic.
    """
    work = [[Fraction(c) for c in row] for row in rows if any(row)]
    pivots = {}
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        pv = work[rk][col]
        work[rk] = [c / pv for c in work[rk]]
        for i in range(len(work)):
            if i != rk and work[i][col]:
                f = work[i][col]
                work[i] = [c - f * d for c, d in zip(work[i], work[rk])]
        pivots[col] = rk
        rk += 1
        if rk == len(work):
            break
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for pc, prow in pivots.items():
            vec[pc] = -work[prow][fc]
        basis.append(vec)
    return basis


def det(matrix) -> Fraction:
    """Determinant by fraction-free style elimination over Q."""
    n = len(matrix)
    work = [[Fraction(c) for c in row] for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        pv = work[col][col]
        result *= pv
        for i in range(col + 1, n):
            if work[i][col]:
                f = work[i][col] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return result * sign
