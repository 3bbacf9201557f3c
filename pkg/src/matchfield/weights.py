"""Weight matrices, initial terms of Plücker forms and induced weight vectors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .combinatorics import (
    MatchingField,
    Permutation,
    Subset,
    check_subset,
    permutation_sign,
    proper_subsets,
)
from .monomials import ExponentMatrix

EXHAUSTIVE_MAX_K = 8


class NonGenericWeight(ValueError):
    """Two permutations tie for the minimum weight of a Plücker form."""

    def __init__(self, subset, weight):
        super().__init__(f"minimum weight {weight} of P_{subset} is attained more than once")
        self.subset = subset
        self.weight = weight


def _exact(x):
    if isinstance(x, Rational):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class WeightMatrix:
    """An ``n x n`` matrix of exact weights; entry ``(i, j)`` weighs ``x_ij``."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(_exact(x) for x in row) for row in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("weight matrix must be square")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, WeightMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"WeightMatrix({self.tolist()})"

    def tolist(self) -> list[list]:
        return [[_plain(x) for x in row] for row in self.rows]


def _plain(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, Fraction):
        return str(x)
    return x


def weight_matrix_block(n: int, ell: int) -> WeightMatrix:
    """The matrix ``M_ell`` inducing the block diagonal matching field ``B_ell``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= ell <= n:
        raise ValueError(f"ell must lie in 0..{n}")
    rows = [[0] * n]
    rows.append(list(range(ell, 0, -1)) + list(range(n, ell, -1)))
    for i in range(3, n + 1):
        rows.append([(i - 1) * (n + 1 - j) for j in range(1, n + 1)])
    return WeightMatrix(rows)


@dataclass(frozen=True)
class InitialTermReport:
    subset: Subset
    permutation: Permutation
    weight: Rational
    sign: int
    exponent: ExponentMatrix


def _cost_matrix(M: WeightMatrix, subset: Subset):
    k = len(subset)
    return [[M[r, i] for r in range(1, k + 1)] for i in subset]


def assignment_exhaustive(cost) -> tuple[tuple[int, ...], object, object]:
    """Best assignment by enumerating all ``k!`` permutations.

    Returns ``(perm, best, second)`` with ``perm[s]`` the 0-based column for
    row ``s`` and ``second`` the next smallest value (``None`` when ``k = 1``).
    """
    k = len(cost)
    best = second = None
    arg = None
    for perm in itertools.permutations(range(k)):
        val = sum(cost[s][perm[s]] for s in range(k))
        if best is None or val < best:
            best, second, arg = val, best, perm
        elif second is None or val < second:
            second = val
    return arg, best, second


def _hungarian(cost, forbidden=frozenset()):
    """Exact minimum-cost perfect assignment (Kuhn-Munkres with potentials).

    ``forbidden`` holds ``(row, col)`` pairs that may not be used.  Returns
    ``(perm, value)`` or ``None`` when no perfect assignment avoids them.
    """
    k = len(cost)
    u = [0] * (k + 1)
    v = [0] * (k + 1)
    p = [0] * (k + 1)
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        p[0] = i
        j0 = 0
        minv = [None] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = None
            j1 = 0
            for j in range(1, k + 1):
                if used[j]:
                    continue
                if (i0 - 1, j - 1) not in forbidden:
                    cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                    if minv[j] is None or cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] is not None and (delta is None or minv[j] < delta):
                    delta = minv[j]
                    j1 = j
            if delta is None:
                return None
            for j in range(k + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    perm = [0] * k
    for j in range(1, k + 1):
        perm[p[j] - 1] = j - 1
    value = sum(cost[s][perm[s]] for s in range(k))
    return tuple(perm), value


def assignment_hungarian(cost) -> tuple[tuple[int, ...], object, object]:
    """Same contract as :func:`assignment_exhaustive` in polynomial time.

    The runner-up value comes from re-solving with each edge of the optimum
    forbidden in turn; the second-best assignment differs from the best in at
    least one edge, so the minimum over these subproblems is exact.
    """
    perm, best = _hungarian(cost)
    second = None
    for s in range(len(cost)):
        alt = _hungarian(cost, frozenset({(s, perm[s])}))
        if alt is not None and (second is None or alt[1] < second):
            second = alt[1]
    return perm, best, second


def initial_term(M: WeightMatrix, subset, method: str = "auto") -> InitialTermReport:
    """Unique lowest-weight term of the Plücker form ``P_subset`` under ``M``."""
    subset = check_subset(subset, M.n)
    cost = _cost_matrix(M, subset)
    if method == "auto":
        method = "exhaustive" if len(subset) <= EXHAUSTIVE_MAX_K else "hungarian"
    if method == "exhaustive":
        perm, best, second = assignment_exhaustive(cost)
    elif method == "hungarian":
        perm, best, second = assignment_hungarian(cost)
    else:
        raise ValueError(f"unknown method {method!r}")
    if second is not None and second == best:
        raise NonGenericWeight(subset, best)
    sigma = tuple(r + 1 for r in perm)
    exponent = ExponentMatrix.from_pairs(M.n, ((sigma[s], i) for s, i in enumerate(subset)))
    return InitialTermReport(subset, sigma, best, permutation_sign(sigma), exponent)


def induced_mismatches(M: WeightMatrix, field: MatchingField, k: int | None = None) -> list:
    """Subsets where ``M`` fails to pick the permutation of ``field``.

    Each entry is ``(subset, reason)`` with reason ``"tie"`` or the permutation
    ``M`` selects instead.
    """
    if M.n != field.n:
        raise ValueError("weight matrix and matching field have different n")
    bad = []
    for subset in proper_subsets(field.n, k):
        try:
            rep = initial_term(M, subset)
        except NonGenericWeight:
            bad.append((subset, "tie"))
            continue
        if rep.permutation != field.permutation(subset):
            bad.append((subset, rep.permutation))
    return bad


def induces(M: WeightMatrix, field: MatchingField, k: int | None = None) -> bool:
    return not induced_mismatches(M, field, k)


def weight_vector(M: WeightMatrix, k: int | None = None) -> dict[Subset, Rational]:
    """Weight of each Plücker variable, in size-then-lexicographic subset order."""
    return {s: initial_term(M, s).weight for s in proper_subsets(M.n, k)}


def initial_terms(M: WeightMatrix, k: int | None = None) -> list[InitialTermReport]:
    return [initial_term(M, s) for s in proper_subsets(M.n, k)]
