"""Subsets, matching fields, tableaux and quadratic moves between tableaux.

Subsets of ``[n]`` are sorted tuples of 1-based integers.  A permutation
``sigma`` of ``{1..k}`` is a tuple ``(sigma(1), ..., sigma(k))``; the column
it produces from ``I = (i_1 < ... < i_k)`` places ``i_s`` at position
``sigma(s)``.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

Subset = tuple[int, ...]
Permutation = tuple[int, ...]
Column = tuple[int, ...]


class NotRowWiseEqual(ValueError):
    """Raised when two tableaux that must be row-wise equal are not."""


def check_subset(subset: Iterable[int], n: int) -> Subset:
    """Return ``subset`` as a sorted tuple, validating it is proper and nonempty."""
    s = tuple(sorted(subset))
    if not s:
        raise ValueError("subset must be nonempty")
    if len(set(s)) != len(s):
        raise ValueError(f"repeated entries in {s}")
    if s[0] < 1 or s[-1] > n:
        raise ValueError(f"entries of {s} must lie in 1..{n}")
    if len(s) >= n:
        raise ValueError(f"{s} is not a proper subset of [{n}]")
    return s


def proper_subsets(n: int, k: int | None = None) -> list[Subset]:
    """All proper nonempty subsets of [n] ordered by size, then lexicographically."""
    sizes = range(1, n) if k is None else (k,)
    return [c for size in sizes for c in itertools.combinations(range(1, n + 1), size)]


def subset_rank(subset: Subset, n: int) -> int:
    """Position of ``subset`` in :func:`proper_subsets` order (combinatorial number system)."""
    k = len(subset)
    rank = sum(comb(n, size) for size in range(1, k))
    prev = 0
    for pos, x in enumerate(subset):
        for y in range(prev + 1, x):
            rank += comb(n - y, k - pos - 1)
        prev = x
    return rank


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def transposition12(k: int) -> Permutation:
    if k < 2:
        return identity(k)
    return (2, 1) + tuple(range(3, k + 1))


def arrange(subset: Subset, perm: Permutation) -> Column:
    col = [0] * len(subset)
    for s, i in enumerate(subset):
        col[perm[s] - 1] = i
    return tuple(col)


def permutation_of_column(column: Column) -> Permutation:
    """Inverse of :func:`arrange`: the permutation that lays ``sorted(column)`` out as ``column``."""
    pos = {v: p + 1 for p, v in enumerate(column)}
    return tuple(pos[i] for i in sorted(column))


def block_diagonal_permutation(subset: Subset, ell: int, n: int | None = None) -> Permutation:
    """Permutation chosen by the block diagonal matching field ``(1..ell | ell+1..n)``.

    The transposition (12) is used exactly when the subset has a single element
    in the first block and at least one element in the second; every other
    subset is read in increasing order.
    """
    if ell < 0 or (n is not None and ell > n):
        raise ValueError(f"ell={ell} out of range")
    k = len(subset)
    if k >= 2 and sum(1 for i in subset if i <= ell) == 1:
        return transposition12(k)
    return identity(k)


@dataclass(frozen=True)
class MatchingField:
    """A choice of permutation for every proper nonempty subset of [n]."""

    n: int
    kind: str = "diagonal"
    ell: int | None = None
    table: tuple[Permutation, ...] | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.kind == "block":
            if self.ell is None or not 0 <= self.ell <= self.n:
                raise ValueError(f"ell must lie in 0..{self.n}")
        elif self.kind == "explicit":
            if self.table is None or len(self.table) != 2**self.n - 2:
                raise ValueError("explicit matching field needs one permutation per proper subset")
            for subset, perm in zip(proper_subsets(self.n), self.table):
                if sorted(perm) != list(range(1, len(subset) + 1)):
                    raise ValueError(f"{perm} is not a permutation for {subset}")
        elif self.kind != "diagonal":
            raise ValueError(f"unknown matching field kind {self.kind!r}")

    @classmethod
    def diagonal(cls, n: int) -> "MatchingField":
        return cls(n)

    @classmethod
    def block(cls, n: int, ell: int) -> "MatchingField":
        return cls(n, "block", ell)

    @classmethod
    def explicit(cls, n: int, perms: Mapping[Subset, Permutation]) -> "MatchingField":
        table = []
        for subset in proper_subsets(n):
            if subset not in perms:
                raise ValueError(f"no permutation given for {subset}")
            table.append(tuple(perms[subset]))
        return cls(n, "explicit", None, tuple(table))

    @classmethod
    def from_identity_set(cls, n: int, id_subsets: Iterable[Subset]) -> "MatchingField":
        """Field using id on ``id_subsets`` and singletons, and (12) on every other subset."""
        keep = {tuple(sorted(s)) for s in id_subsets}
        perms = {}
        for s in proper_subsets(n):
            perms[s] = identity(len(s)) if (len(s) == 1 or s in keep) else transposition12(len(s))
        return cls.explicit(n, perms)

    def permutation(self, subset: Subset) -> Permutation:
        if self.kind == "block":
            return block_diagonal_permutation(subset, self.ell, self.n)
        if self.kind == "explicit":
            return self.table[subset_rank(subset, self.n)]
        return identity(len(subset))

    def column(self, subset: Subset) -> Column:
        return arrange(subset, self.permutation(subset))

    def sign(self, subset: Subset) -> int:
        return permutation_sign(self.permutation(subset))

    def is_column(self, column: Column) -> bool:
        s = tuple(sorted(column))
        if len(set(s)) != len(s) or not s or s[0] < 1 or s[-1] > self.n or len(s) >= self.n:
            return False
        return self.column(s) == tuple(column)

    def to_json(self) -> dict:
        data = {"n": self.n, "kind": "explicit" if self.kind == "explicit" else self.kind}
        if self.kind == "block":
            data["ell"] = self.ell
        if self.kind == "explicit":
            data["table"] = {
                ",".join(map(str, s)): list(p) for s, p in zip(proper_subsets(self.n), self.table)
            }
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "MatchingField":
        kind = data.get("kind", "diagonal")
        n = int(data["n"])
        if kind == "block":
            return cls.block(n, int(data["ell"]))
        if kind == "explicit":
            perms = {
                tuple(int(x) for x in key.split(",")): tuple(v) for key, v in data["table"].items()
            }
            return cls.explicit(n, perms)
        return cls.diagonal(n)


def column_of(field: MatchingField, subset: Subset) -> Column:
    return field.column(subset)


def sgn(field: MatchingField, subset: Subset) -> int:
    return field.sign(subset)


class Tableau:
    """A multiset of columns; column order is kept for display but ignored by ``==``."""

    __slots__ = ("n", "columns", "key")

    def __init__(self, columns: Iterable[Sequence[int]], n: int):
        self.n = n
        self.columns = tuple(tuple(c) for c in columns)
        self.key = tuple(sorted(self.columns, key=lambda c: (-len(c), c)))

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.n == other.n and self.key == other.key

    def __hash__(self):
        return hash((self.n, self.key))

    def __lt__(self, other: "Tableau"):
        return self.key < other.key

    def __repr__(self):
        return f"Tableau({[list(c) for c in self.columns]}, n={self.n})"

    def __len__(self):
        return len(self.columns)

    def canonical(self) -> "Tableau":
        return Tableau(self.key, self.n)

    def rows(self) -> list[list[int]]:
        depth = max((len(c) for c in self.columns), default=0)
        return [[c[r] for c in self.columns if len(c) > r] for r in range(depth)]

    def is_valid(self, field: MatchingField) -> bool:
        return all(field.is_column(c) for c in self.columns)

    def to_json(self) -> dict:
        return {"n": self.n, "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Tableau":
        return cls(data["columns"], int(data["n"]))

    @classmethod
    def from_subsets(cls, field: MatchingField, subsets: Iterable[Subset]) -> "Tableau":
        return cls((field.column(tuple(sorted(s))) for s in subsets), field.n)


def row_multisets(tableau: Tableau) -> list[Counter]:
    return [Counter(row) for row in tableau.rows()]


def row_content(tableau: Tableau) -> tuple[tuple[int, ...], ...]:
    """Hashable form of :func:`row_multisets` (each row sorted)."""
    return tuple(tuple(sorted(row)) for row in tableau.rows())


def row_wise_equal(t1: Tableau, t2: Tableau) -> bool:
    return row_content(t1) == row_content(t2)


def _exchange(a: Column, b: Column, rows: Sequence[int]) -> tuple[Column, Column]:
    a2, b2 = list(a), list(b)
    for r in rows:
        a2[r], b2[r] = b[r], a[r]
    return tuple(a2), tuple(b2)


def enumerate_swaps(tableau: Tableau, field: MatchingField, multi_row: bool = True) -> set[Tableau]:
    """Tableaux valid for ``field`` reachable from ``tableau`` by one quadratic move.

    A move rewrites exactly two columns by exchanging their entries in any
    set of common rows (a single row when ``multi_row`` is False); both new
    columns must again be columns of the matching field.  Single-row moves
    alone do not connect row-wise equal tableaux even for the diagonal field
    (``P12*P234`` against ``P23*P124`` needs two rows at once).
    """
    cols = tableau.key
    out: set[Tableau] = set()
    for x, y in itertools.combinations(range(len(cols)), 2):
        a, b = cols[x], cols[y]
        common = min(len(a), len(b))
        if multi_row:
            row_sets = (
                rs for size in range(1, common + 1) for rs in itertools.combinations(range(common), size)
            )
        else:
            row_sets = ((r,) for r in range(common))
        for rs in row_sets:
            a2, b2 = _exchange(a, b, rs)
            if not (field.is_column(a2) and field.is_column(b2)):
                continue
            new = cols[:x] + (a2,) + cols[x + 1 : y] + (b2,) + cols[y + 1 :]
            t = Tableau(new, tableau.n)
            if t != tableau:
                out.add(t)
    return out


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    path: tuple[Tableau, ...]
    explored: int


def quadratic_equivalent(
    t1: Tableau, t2: Tableau, field: MatchingField, multi_row: bool = True
) -> Equivalence:
    """Breadth-first search for a chain of quadratic moves from ``t1`` to ``t2``.

    Neighbours are visited in increasing canonical order, so the returned
    path is deterministic.  When no chain exists the whole component of
    ``t1`` has been explored.
    """
    if not row_wise_equal(t1, t2):
        raise NotRowWiseEqual(f"{t1} and {t2} are not row-wise equal")
    start, goal = t1.canonical(), t2.canonical()
    parent: dict[Tableau, Tableau | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            path = [cur]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return Equivalence(True, tuple(reversed(path)), len(parent))
        for nxt in sorted(enumerate_swaps(cur, field, multi_row)):
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    return Equivalence(False, (), len(parent))


def tableaux_up_to(field: MatchingField, max_columns: int, k: int | None = None) -> Iterator[Tableau]:
    """Every tableau of the field with 1..max_columns columns (as column multisets)."""
    cols = [field.column(s) for s in proper_subsets(field.n, k)]
    for size in range(1, max_columns + 1):
        for combo in itertools.combinations_with_replacement(cols, size):
            yield Tableau(combo, field.n)


def row_equality_classes(field: MatchingField, max_columns: int, k: int | None = None) -> dict:
    """Group tableaux with at most ``max_columns`` columns by row content."""
    classes: dict = {}
    for t in tableaux_up_to(field, max_columns, k):
        classes.setdefault((len(t), row_content(t)), []).append(t)
    return classes


def disconnected_classes(
    field: MatchingField, max_columns: int, k: int | None = None, multi_row: bool = True
) -> list[list[Tableau]]:
    """Row-wise equality classes not connected by quadratic moves.

    An empty result means every pair of row-wise equal tableaux with at most
    ``max_columns`` columns is quadratically equivalent.
    """
    bad = []
    for members in row_equality_classes(field, max_columns, k).values():
        if len(members) < 2:
            continue
        index = {t: i for i, t in enumerate(members)}
        root = list(range(len(members)))

        def find(i):
            while root[i] != i:
                root[i] = root[root[i]]
                i = root[i]
            return i

        for t in members:
            for u in enumerate_swaps(t, field, multi_row):
                a, b = find(index[t]), find(index[u])
                if a != b:
                    root[a] = b
        if len({find(i) for i in range(len(members))}) > 1:
            bad.append(members)
    return bad
