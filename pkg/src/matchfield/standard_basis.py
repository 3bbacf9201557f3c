"""Two-column tableau bases for block diagonal matching fields.

For ``B_ell = (1..ell | ell+1..n)`` every degree-two monomial ``P_I P_J`` is
row-wise equal to exactly one tableau of a typed family, and that family is
in bijection with two-column semi-standard tableaux.  The rectangular
(Grassmannian) types are ``1, 2, 3A, 3B(r), 3C(s), 3D(s)``; the flag family
adds the prefixes ``1.`` and ``2.`` and the one-box-column types
``3A(1), 3A(2), 3B, 3C, 3D``.

Within this module ``I`` and ``J`` are the sorted entry sets of the two
columns, and ``i_1 < i_2 < ...`` their elements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinatorics import MatchingField, Subset, Tableau, proper_subsets, row_content


class NotInBasis(ValueError):
    pass


@dataclass(frozen=True)
class TableauType:
    """Type tag such as ``1.3B(3)`` or ``3A(2)``.

    For ``3C(s)`` and ``3D(s)`` the field ``rows`` records how far the row
    transposition of ``S`` reaches; it exceeds ``s`` only when rows below ``s``
    are forced to have ``i_t > j_t``.
    """

    base: str
    param: int | None = None
    prefix: str = ""
    rows: int | None = None

    def __str__(self):
        p = f"({self.param})" if self.param is not None else ""
        if self.rows is not None and self.rows != self.param:
            p = f"({self.param}, r={self.rows})"
        return f"{self.prefix}{self.base}{p}"

    @property
    def tag(self) -> str:
        return str(self)


NOT_IN_BASIS = TableauType("NotInBasis")


def _in_b1(x: int, ell: int) -> bool:
    return x <= ell


def _swapped(s: Subset, ell: int) -> bool:
    return len(s) >= 2 and sum(1 for x in s if x <= ell) == 1


def _two_columns(t: Tableau, ell: int) -> tuple[Subset, Subset, tuple, tuple]:
    if len(t.columns) != 2:
        raise ValueError("expected a tableau with exactly two columns")
    field = MatchingField.block(t.n, ell)
    if not t.is_valid(field):
        raise ValueError(f"{t} is not a tableau of B_{ell}")
    a, b = sorted(t.columns, key=len, reverse=True)
    return tuple(sorted(a)), tuple(sorted(b)), a, b


def _gr_type(I: Subset, J: Subset, ell: int) -> TableauType | None:
    """Rectangular type of the ordered pair ``(I, J)``, or ``None``."""
    k = len(I)
    b1 = lambda x: _in_b1(x, ell)
    sI, sJ = _swapped(I, ell), _swapped(J, ell)
    below = all(I[r] <= J[r] for r in range(k))
    if not sI and not sJ and below:
        return TableauType("1")
    if sI and sJ and below:
        return TableauType("2")
    if not sI or k < 2:
        return None
    tail_ok = lambda start: all(I[r] <= J[r] for r in range(start, k))
    if not any(b1(j) for j in J):
        if I[1] <= J[0] and tail_ok(2):
            return TableauType("3A")
        if J[0] < J[1] <= I[1]:
            r = next(t for t in range(2, k + 1) if t == k or J[t] > I[t - 1])
            if all(I[x] > J[x] for x in range(2, r)) and tail_ok(r):
                return TableauType("3B", r)
        return None
    s = sum(1 for j in J if b1(j))
    if s < 2 or any(b1(j) for j in J[s:]):
        return None
    r = _reach(I, J, s)
    if not (all(I[t] > J[t] for t in range(s, r)) and tail_ok(r)):
        return None
    if I[0] <= J[0]:
        return TableauType("3C", s, rows=r)
    if I[0] >= J[1]:
        return TableauType("3D", s, rows=r)
    return None


def _reach(I: Subset, J: Subset, start: int) -> int:
    """``min{t >= start : t = k or j_{t+1} > i_t}`` (1-based rows)."""
    k = len(I)
    return next(t for t in range(start, k + 1) if t == k or J[t] > I[t - 1])


def classify_gr_pair(A: Subset, B: Subset, ell: int) -> tuple[TableauType, Subset, Subset]:
    """Type of the rectangular tableau with column sets ``A`` and ``B``.

    Returns ``(type, I, J)`` where ``(I, J)`` is the ordering the type refers to.
    """
    if len(A) != len(B):
        raise ValueError("rectangular tableau expected")
    for I, J in ((A, B), (B, A)):
        typ = _gr_type(I, J, ell)
        if typ is not None:
            return typ, I, J
    return NOT_IN_BASIS, A, B


def classify_gr(t: Tableau, ell: int) -> TableauType:
    A, B, _, _ = _two_columns(t, ell)
    if len(A) != len(B):
        raise ValueError("rectangular tableau expected")
    return classify_gr_pair(A, B, ell)[0]


def _s_gr(I: Subset, J: Subset, typ: TableauType) -> tuple[Subset, Subset]:
    if typ.base in ("1", "2", "3A"):
        return I, J
    if typ.base == "3B":
        r = typ.param
        return I[:1] + J[1:r] + I[r:], J[:1] + I[1:r] + J[r:]
    r = typ.rows
    if typ.base == "3C":
        return I[:1] + J[1:r] + I[r:], J[:1] + I[1:r] + J[r:]
    if typ.base == "3D":
        return J[:r] + I[r:], I[:r] + J[r:]
    raise NotInBasis(str(typ))


def _s_gr_inverse(a: Subset, b: Subset, ell: int) -> tuple[Subset, Subset]:
    """Ordered pair ``(I, J)`` of the rectangular basis tableau mapping to ``(a | b)``."""
    k = len(a)
    nA = sum(1 for x in a if x <= ell)
    nB = sum(1 for x in b if x <= ell)
    if k == 1 or _swapped(a, ell) == _swapped(b, ell):
        I, J = a, b
    elif nA == 1 and nB == 0:
        if a[1] <= b[0]:
            I, J = a, b
        else:
            r = next(t for t in range(2, k + 1) if t == k or a[t] > b[t - 1])
            I, J = _invert_3b(a, b, r)
    elif nA >= 2 and nB == 1:
        r = next(t for t in range(nA, k + 1) if t == k or a[t] > b[t - 1])
        if b[0] < a[1]:
            I, J = a[:1] + b[1:r] + a[r:], b[:1] + a[1:r] + b[r:]
        else:
            I, J = b[:r] + a[r:], a[:r] + b[r:]
    else:
        raise ValueError(f"({a} | {b}) is not semi-standard")
    return tuple(sorted(I)), tuple(sorted(J))


def _invert_3b(a: Subset, b: Subset, r: int) -> tuple[Subset, Subset]:
    # image of 3B(r) is left = (i1, j2..jr, i_{r+1}..), right = (j1, i2..ir, j_{r+1}..)
    I = a[:1] + b[1:r] + a[r:]
    J = b[:1] + a[1:r] + b[r:]
    return I, J


def S_gr(t: Tableau, ell: int) -> Tableau:
    """Semi-standard image of a rectangular basis tableau."""
    A, B, _, _ = _two_columns(t, ell)
    typ, I, J = classify_gr_pair(A, B, ell)
    if typ == NOT_IN_BASIS:
        raise NotInBasis(f"{t} is not a basis tableau for B_{ell}")
    left, right = _s_gr(I, J, typ)
    return Tableau((left, right), t.n)


def _flag_type(A: Subset, B: Subset, colA: tuple, ell: int) -> TableauType:
    s, t = len(A), len(B)
    if s == t:
        typ = classify_gr_pair(A, B, ell)[0]
        return NOT_IN_BASIS if typ == NOT_IN_BASIS else TableauType(typ.base, typ.param, "1.", typ.rows)
    if t >= 2:
        head = tuple(sorted(colA[:t]))
        tail = colA[t:]
        for I, J, head_is_I in ((head, B, True), (B, head, False)):
            typ = _gr_type(I, J, ell)
            if typ is None:
                continue
            if (I[-1] <= J[-1]) != head_is_I:
                continue
            if tail[0] > min(I[-1], J[-1]):
                return TableauType(typ.base, typ.param, "2.", typ.rows)
        return NOT_IN_BASIS
    i1, i2, j1 = A[0], A[1], B[0]
    b1 = lambda x: _in_b1(x, ell)
    if b1(i1) and b1(i2) and i1 <= j1:
        return TableauType("3A", 1)
    if not b1(i1) and not b1(i2):
        if i1 <= j1:
            return TableauType("3A", 2)
        if b1(j1):
            return TableauType("3B")
        return NOT_IN_BASIS
    if b1(i1) and not b1(i2):
        if not b1(j1) and i2 <= j1:
            return TableauType("3C")
        if b1(j1) and i1 <= j1:
            return TableauType("3D")
    return NOT_IN_BASIS


def classify_flag(t: Tableau, ell: int) -> TableauType:
    """Type of a two-column tableau in the flag basis, or ``NotInBasis``."""
    if len(t.columns) != 2:
        return NOT_IN_BASIS
    A, B, colA, _ = _two_columns(t, ell)
    return _flag_type(A, B, colA, ell)


def in_basis(t: Tableau, ell: int) -> bool:
    return classify_flag(t, ell) != NOT_IN_BASIS


def S_flag(t: Tableau, ell: int) -> Tableau:
    """Semi-standard tableau assigned to a flag basis tableau."""
    A, B, colA, _ = _two_columns(t, ell)
    typ = _flag_type(A, B, colA, ell)
    if typ == NOT_IN_BASIS:
        raise NotInBasis(f"{t} is not a basis tableau for B_{ell}")
    s, tt = len(A), len(B)
    if typ.prefix == "1.":
        return S_gr(t, ell)
    if typ.prefix == "2.":
        head = tuple(sorted(colA[:tt]))
        tail = colA[tt:]
        gtyp, I, J = classify_gr_pair(head, B, ell)
        if gtyp == NOT_IN_BASIS or {I, J} != {head, B}:
            raise AssertionError("inconsistent type 2 block")
        for I, J in ((head, B), (B, head)):
            g = _gr_type(I, J, ell)
            if g is not None and (I[-1] <= J[-1]) == (I == head):
                left, right = _s_gr(I, J, g)
                return Tableau((left + tail, right), t.n)
        raise AssertionError("inconsistent type 2 block")
    if typ.base == "3B":
        return Tableau((B + A[1:], A[:1]), t.n)
    return Tableau((A, B), t.n)


def is_semistandard(t: Tableau) -> bool:
    if len(t.columns) != 2:
        return False
    a, b = t.columns
    if len(a) < len(b):
        return False
    if any(x >= y for x, y in zip(a, a[1:])) or any(x >= y for x, y in zip(b, b[1:])):
        return False
    return all(a[r] <= b[r] for r in range(len(b)))


def S_flag_inverse(t: Tableau, ell: int) -> Tableau:
    """The basis tableau of ``B_ell`` whose semi-standard image is ``t``."""
    if not is_semistandard(t):
        raise ValueError(f"{t} is not a two-column semi-standard tableau")
    a, b = t.columns
    n = t.n
    field = MatchingField.block(n, ell)
    s, tt = len(a), len(b)
    if s == tt:
        I, J = _s_gr_inverse(a, b, ell)
    elif tt >= 2:
        I, J = _s_gr_inverse(a[:tt], b, ell)
        tail = a[tt:]
        if I[-1] <= J[-1]:
            I = I + tail
        else:
            J = J + tail
    else:
        i1, i2, j1 = a[0], a[1], b[0]
        if _in_b1(i1, ell) and not _in_b1(i2, ell) and not _in_b1(j1, ell) and j1 < i2:
            I, J = (j1,) + a[1:], (i1,)
        else:
            I, J = a, b
    return Tableau.from_subsets(field, (I, J))


def _row_exchanges(colA: tuple, colB: tuple):
    k = min(len(colA), len(colB))
    for size in range(k + 1):
        for rows in itertools.combinations(range(k), size):
            a, b = list(colA), list(colB)
            for r in rows:
                a[r], b[r] = colB[r], colA[r]
            yield tuple(a), tuple(b)


def _normalize_rectangular(colA: tuple, colB: tuple, field: MatchingField) -> Tableau:
    ell = field.ell
    found = []
    for a, b in _row_exchanges(colA, colB):
        if field.is_column(a) and field.is_column(b):
            typ = classify_gr_pair(tuple(sorted(a)), tuple(sorted(b)), ell)[0]
            if typ != NOT_IN_BASIS:
                found.append(Tableau((a, b), field.n))
    if len(set(found)) != 1:
        raise AssertionError(f"{len(set(found))} basis tableaux row-wise equal to {colA}|{colB}")
    return found[0]


def normalize_to_basis(t: Tableau, ell: int) -> Tableau:
    """The basis tableau row-wise equal to ``t``."""
    A, B, colA, colB = _two_columns(t, ell)
    field = MatchingField.block(t.n, ell)
    s, tt = len(A), len(B)
    if s == tt:
        return _normalize_rectangular(colA, colB, field)
    if tt >= 2:
        block = _normalize_rectangular(colA[:tt], colB, field)
        _, I, J = classify_gr_pair(*(tuple(sorted(c)) for c in block.columns), ell)
        tail = colA[tt:]
        if I[-1] <= J[-1]:
            I = I + tail
        else:
            J = J + tail
        return Tableau.from_subsets(field, (I, J))
    i1, i2, j1 = A[0], A[1], B[0]
    b1 = lambda x: _in_b1(x, ell)
    row1 = colA[0]
    swap = False
    if b1(i1) and b1(i2):
        swap = b1(j1) and i1 > j1
    elif b1(i1):
        swap = (b1(j1) and i1 > j1) or (not b1(j1) and i2 > j1)
    elif not b1(j1):
        swap = i1 > j1
    if not swap:
        return Tableau((colA, colB), t.n)
    I = tuple(sorted((set(A) - {row1}) | {j1}))
    return Tableau.from_subsets(field, (I, (row1,)))


def two_column_tableaux(field: MatchingField, k: int | None = None) -> list[Tableau]:
    """All tableaux ``P_I P_J`` of the field (unordered pairs, ``I = J`` allowed)."""
    subs = proper_subsets(field.n, k)
    return [Tableau.from_subsets(field, p) for p in itertools.combinations_with_replacement(subs, 2)]


def basis(ell: int, n: int, k: int | None = None) -> list[Tableau]:
    field = MatchingField.block(n, ell)
    return [t for t in two_column_tableaux(field, k) if in_basis(t, ell)]


def semistandard_two_column(n: int, k: int | None = None) -> list[Tableau]:
    """Two-column semi-standard tableaux with column lengths in ``1..n-1``."""
    out = []
    for a, b in itertools.product(proper_subsets(n, k), repeat=2):
        if len(a) >= len(b) and all(a[r] <= b[r] for r in range(len(b))):
            out.append(Tableau((a, b), n))
    return out


def row_class(t: Tableau):
    return row_content(t)
