"""Shared oracles, independent of the implementation paths they check."""

from __future__ import annotations

import random
from fractions import Fraction

from friezelotus.polygon import TriangulatedPolygon


def tridiagonal_determinant(diag: list[int]) -> int:
    """Exact determinant of the tridiagonal matrix with unit off-diagonals,
    by fraction-free Gaussian elimination (Bareiss), not the three-term
    recurrence."""
    n = len(diag)
    if n == 0:
        return 1
    mat = [[Fraction(0)] * n for _ in range(n)]
    for t in range(n):
        mat[t][t] = Fraction(diag[t])
        if t + 1 < n:
            mat[t][t + 1] = Fraction(1)
            mat[t + 1][t] = Fraction(1)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, n):
            factor = mat[r][col] / mat[col][col]
            for c in range(col, n):
                mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return det.numerator


def catalan_by_recurrence(n: int) -> int:
    """C_0 = 1, C_{k+1} = sum_i C_i * C_{k-i}."""
    cats = [1]
    for k in range(n):
        cats.append(sum(cats[i] * cats[k - i] for i in range(k + 1)))
    return cats[n]


def random_triangulation(m: int, rng: random.Random) -> TriangulatedPolygon:
    """Uniform-ish random triangulation by random recursive splitting."""
    diagonals = set()

    def split(lo: int, hi: int) -> None:
        if hi - lo < 2:
            return
        k = rng.randint(lo + 1, hi - 1)
        if k - lo >= 2:
            diagonals.add((lo, k))
        if hi - k >= 2:
            diagonals.add((k, hi))
        split(lo, k)
        split(k, hi)

    split(1, m)
    return TriangulatedPolygon(m, frozenset(diagonals))


def coprime_pairs(limit: int):
    """All (n, q) with 1 <= q < n <= limit and gcd = 1."""
    from math import gcd
    return [(n, q) for n in range(2, limit + 1)
            for q in range(1, n) if gcd(n, q) == 1]
