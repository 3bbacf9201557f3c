"""Exact linear algebra over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the echelon rows (only the first ``rank`` are nonzero) and the
    pivot column of each.  Every division in the Bareiss update is exact.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return a, []
    m, ncols = len(a), len(a[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(bareiss_echelon(rows)[1])


def pivot_columns(rows: Sequence[Sequence[int]]) -> list[int]:
    """Indices of a maximal set of linearly independent columns."""
    return bareiss_echelon(rows)[1]


def independent_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    """Indices of a maximal set of linearly independent rows, chosen greedily in order."""
    cols = list(zip(*rows)) if rows else []
    return pivot_columns([list(c) for c in cols])


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A rational solution of ``a x = b`` with free variables set to zero, or ``None``."""
    m = len(a)
    ncols = len(a[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(aug[i][-1] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def nullspace(rows: Sequence[Sequence]) -> list[list[int]]:
    """Primitive integer basis of ``{y : rows @ y = 0}``."""
    ncols = len(rows[0]) if rows else 0
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        y = [Fraction(0)] * ncols
        y[free] = Fraction(1)
        for i, c in enumerate(pivots):
            y[c] = -a[i][free]
        basis.append(primitive(y))
    return basis


def primitive(v: Sequence) -> list[int]:
    """Scale a rational vector to the primitive integer vector with the same direction."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints
