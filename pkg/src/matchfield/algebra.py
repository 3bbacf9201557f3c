"""Plücker forms, the monomial map of a matching field and degree-two ideals.

A monomial ``P_{I_1} ... P_{I_t}`` in the Plücker variables is a ``PMonomial``:
a tuple of subsets in canonical order (size, then lexicographic).  Polynomials
in the Plücker variables are dictionaries ``PMonomial -> coefficient``.
"""
from __future__ import annotations

import itertools
import re
from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import exact
from .combinatorics import (
    MatchingField,
    Subset,
    check_subset,
    disconnected_classes,
    permutation_sign,
    proper_subsets,
)
from .monomials import ExponentMatrix
from .weights import WeightMatrix, initial_term, weight_matrix_block, weight_vector

PMonomial = tuple[Subset, ...]


class NoLift(ValueError):
    """A degree-two kernel binomial is not the initial form of any Plücker relation."""


def _subset_key(s: Subset):
    return (len(s), s)


def pmonomial(*subsets: Iterable[int]) -> PMonomial:
    return tuple(sorted((tuple(sorted(s)) for s in subsets), key=_subset_key))


def _mono_key(m: PMonomial):
    return (len(m), tuple(_subset_key(s) for s in m))


def variable_name(column, n: int) -> str:
    if n <= 9:
        return "P" + "".join(map(str, column))
    return "P_{" + ",".join(map(str, column)) + "}"


def format_monomial(m: PMonomial, field: MatchingField | None, n: int) -> str:
    if not m:
        return "1"
    cols = [field.column(s) if field is not None else s for s in m]
    return "*".join(variable_name(c, n) for c in cols)


def format_polynomial(f: Mapping[PMonomial, object], field: MatchingField | None, n: int) -> str:
    out = []
    for m in sorted(f, key=_mono_key):
        c = f[m]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_monomial(m, field, n)
        term = body if mag == 1 else f"{mag}*{body}"
        out.append((sign, term))
    if not out:
        return "0"
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, term in out[1:]:
        text += f" {sign} {term}"
    return text


_VAR = re.compile(r"P_?\{?([0-9,]+)\}?")


def parse_monomial(text: str, field: MatchingField | None = None) -> PMonomial:
    """Parse ``"P23*P134"`` (or ``"P23 P134"``); single-digit entries unless braced."""
    subsets = []
    for token in _VAR.findall(text):
        entries = [int(x) for x in (token.split(",") if "," in token else token)]
        if field is not None and not field.is_column(tuple(entries)):
            raise ValueError(f"P{token} is not a column of the matching field")
        subsets.append(entries)
    return pmonomial(*subsets)


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?((?:P_?\{?[0-9,]+\}?\s*\*?\s*)+)")


def parse_polynomial(text: str, field: MatchingField | None = None) -> dict[PMonomial, int]:
    """Parse ``"P23*P134 - P13*P234"`` into ``{monomial: coefficient}``."""
    out: dict[PMonomial, int] = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign * int(m.group(2) or 1)
        mono = parse_monomial(m.group(3), field)
        out[mono] = out.get(mono, 0) + coeff
        pos = m.end()
    return {k: v for k, v in out.items() if v}


def same_up_to_sign(f: Mapping[PMonomial, object], g: Mapping[PMonomial, object]) -> bool:
    f, g = dict(f), dict(g)
    return f == g or f == {k: -v for k, v in g.items()}


@lru_cache(maxsize=None)
def _plucker_terms(n: int, subset: Subset) -> tuple[tuple[int, tuple[int, ...]], ...]:
    k = len(subset)
    terms = []
    for perm in itertools.permutations(range(1, k + 1)):
        cells = tuple(sorted((perm[s] - 1) * n + (i - 1) for s, i in enumerate(subset)))
        terms.append((permutation_sign(perm), cells))
    return tuple(terms)


def plucker_form(n: int, subset) -> dict[ExponentMatrix, int]:
    """The maximal minor on rows ``1..|I|`` and columns ``I`` of the generic matrix."""
    subset = check_subset(subset, n)
    return {ExponentMatrix(n, cells): c for c, cells in _plucker_terms(n, subset)}


def _expand(n: int, m: PMonomial) -> dict[tuple[int, ...], int]:
    """Image of a Plücker monomial under the map to minors, keyed by sorted cells."""
    poly: dict[tuple[int, ...], int] = {(): 1}
    for s in m:
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for cells, c in poly.items():
            for sign, extra in _plucker_terms(n, s):
                nxt[tuple(sorted(cells + extra))] += c * sign
        poly = {k: v for k, v in nxt.items() if v}
    return poly


def plucker_image(n: int, f: Mapping[PMonomial, object]) -> dict[ExponentMatrix, object]:
    """Exact image of a Plücker polynomial as a polynomial in the ``x_ij``."""
    total: dict[tuple[int, ...], object] = defaultdict(int)
    for m, c in f.items():
        for cells, v in _expand(n, m).items():
            total[cells] += c * v
    return {ExponentMatrix(n, cells): v for cells, v in total.items() if v}


def phi(field: MatchingField, m: PMonomial) -> tuple[int, ExponentMatrix]:
    """Signed monomial ``prod sgn(L(I)) x_L(I)`` assigned to ``m`` by the matching field."""
    sign = 1
    cells: list[int] = []
    n = field.n
    for s in m:
        perm = field.permutation(s)
        sign *= permutation_sign(perm)
        cells.extend((perm[t] - 1) * n + (i - 1) for t, i in enumerate(s))
    return sign, ExponentMatrix(n, cells)


@dataclass(frozen=True)
class SignedBinomial:
    """``c1 * first + c2 * second`` with ``c1 = +1`` and ``first`` before ``second``."""

    first: PMonomial
    second: PMonomial
    c2: int
    c1: int = 1

    @classmethod
    def make(cls, a: PMonomial, ca: int, b: PMonomial, cb: int) -> "SignedBinomial":
        if a == b:
            raise ValueError("binomial terms must differ")
        if _mono_key(b) < _mono_key(a):
            a, ca, b, cb = b, cb, a, ca
        return cls(a, b, cb * ca, 1)

    def polynomial(self) -> dict[PMonomial, int]:
        return {self.first: self.c1, self.second: self.c2}

    def format(self, field: MatchingField | None, n: int) -> str:
        return format_polynomial(self.polynomial(), field, n)

    def sort_key(self):
        return (_mono_key(self.first), _mono_key(self.second), self.c2)


def degree2_monomials(n: int, k: int | None = None) -> list[PMonomial]:
    subs = proper_subsets(n, k)
    return [pmonomial(a, b) for a, b in itertools.combinations_with_replacement(subs, 2)]


def degree2_classes(field: MatchingField, k: int | None = None) -> dict[ExponentMatrix, list]:
    """Degree-two monomials grouped by their image exponent: ``exponent -> [(sign, monomial)]``."""
    classes: dict[ExponentMatrix, list] = defaultdict(list)
    for m in degree2_monomials(field.n, k):
        sign, e = phi(field, m)
        classes[e].append((sign, m))
    return classes


def degree2_kernel(field: MatchingField, k: int | None = None) -> list[SignedBinomial]:
    """Every binomial ``c1 P_I P_J + c2 P_K P_L`` killed by the signed monomial map."""
    out = set()
    for members in degree2_classes(field, k).values():
        for (sa, a), (sb, b) in itertools.combinations(members, 2):
            out.add(SignedBinomial.make(a, 1, b, -sa * sb))
    return sorted(out, key=SignedBinomial.sort_key)


def dim_degree2_initial_algebra(field: MatchingField, k: int | None = None) -> int:
    """Dimension of the degree-two part of the algebra generated by the chosen monomials."""
    return len(degree2_classes(field, k))


def monomial_weight(w: Mapping[Subset, object], m: PMonomial):
    return sum(w[s] for s in m)


def initial_form(w: Mapping[Subset, object], f: Mapping[PMonomial, object]) -> dict[PMonomial, object]:
    """Terms of ``f`` of minimal ``w``-weight."""
    f = {m: c for m, c in f.items() if c}
    if not f:
        return {}
    low = min(monomial_weight(w, m) for m in f)
    return {m: c for m, c in f.items() if monomial_weight(w, m) == low}


def _grading(m: PMonomial):
    return (tuple(sorted(len(s) for s in m)), tuple(sorted(x for s in m for x in s)))


@lru_cache(maxsize=None)
def _graded_degree2(n: int, k: int | None) -> dict:
    pieces: dict = defaultdict(list)
    for m in degree2_monomials(n, k):
        pieces[_grading(m)].append(m)
    return dict(pieces)


def _as_number(x: Fraction):
    return int(x) if x.denominator == 1 else x


def lift_to_plucker_relation(
    b: SignedBinomial, w: Mapping[Subset, object], n: int
) -> dict[PMonomial, object]:
    """A quadratic Plücker relation whose initial form under ``w`` is ``b``.

    Solves exactly for coefficients on the monomials of strictly larger weight
    in the same multidegree as ``b``.  Raises :class:`NoLift` when none exists.
    """
    piece = _graded_degree2(n, None)[_grading(b.first)]
    w0 = monomial_weight(w, b.first)
    if monomial_weight(w, b.second) != w0:
        raise NoLift("binomial is not w-homogeneous")
    higher = [m for m in piece if monomial_weight(w, m) > w0]
    target = plucker_image(n, b.polynomial())
    images = [plucker_image(n, {m: 1}) for m in higher]
    rows = sorted(set(target).union(*images))
    a = [[img.get(e, 0) for img in images] for e in rows]
    rhs = [-target.get(e, 0) for e in rows]
    if not higher:
        sol = [] if all(v == 0 for v in rhs) else None
    else:
        sol = exact.solve(a, rhs)
    if sol is None:
        raise NoLift(f"{b.format(None, n)} has no lift to a Plücker relation")
    g: dict[PMonomial, object] = dict(b.polynomial())
    for m, c in zip(higher, sol):
        if c:
            g[m] = _as_number(c)
    return g


def plucker_degree2_rank(n: int, k: int | None = None) -> int:
    """Rank of the span of all products ``P_I P_J`` of Plücker forms."""
    total = 0
    for piece in _graded_degree2(n, k).values():
        images = [_expand(n, m) for m in piece]
        cols = sorted(set().union(*images))
        index = {c: i for i, c in enumerate(cols)}
        rows = []
        for img in images:
            row = [0] * len(cols)
            for c, v in img.items():
                row[index[c]] = v
            rows.append(row)
        total += exact.rank(rows)
    return total


@dataclass
class SagbiReport:
    n: int
    label: str
    quadratic_generation: bool
    dim_equal: bool
    lifts_exist: bool | None
    dim: int = 0
    dim_diagonal: int = 0
    kernel_size: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def certified(self) -> bool:
        return bool(self.quadratic_generation and self.dim_equal and self.lifts_exist)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.label,
            "quadratic_generation": self.quadratic_generation,
            "dim_equal": self.dim_equal,
            "lifts_exist": self.lifts_exist,
            "dim_degree2": self.dim,
            "dim_degree2_diagonal": self.dim_diagonal,
            "kernel_binomials": self.kernel_size,
            "certified": self.certified,
            "failures": [str(f) for f in self.failures],
        }


def sagbi_certificate_degree2(
    n: int,
    ell: int | None = None,
    field: MatchingField | None = None,
    matrix: WeightMatrix | None = None,
    max_columns: int = 3,
    k: int | None = None,
) -> SagbiReport:
    """Degree-two evidence that the Plücker forms are a SAGBI basis for ``field``.

    Checks that row-wise equal tableaux with at most ``max_columns`` columns
    are connected by quadratic moves, that the degree-two initial algebra has
    the dimension of the diagonal one, and that every degree-two kernel
    binomial lifts to a Plücker relation.  Lifting needs a weight matrix and
    is reported as ``None`` for fields given without one.
    """
    if field is None:
        if ell is None:
            raise ValueError("give ell or an explicit matching field")
        field = MatchingField.block(n, ell)
    if matrix is None and field.kind == "block":
        matrix = weight_matrix_block(n, field.ell)
    label = f"B_{field.ell}" if field.kind == "block" else field.kind
    failures: list = []

    bad = disconnected_classes(field, max_columns, k)
    failures.extend(("not quadratically connected", [t.columns for t in c]) for c in bad)

    dim = dim_degree2_initial_algebra(field, k)
    dim0 = dim_degree2_initial_algebra(MatchingField.diagonal(n), k)
    if dim != dim0:
        failures.append(("dimension", dim, dim0))

    kernel = degree2_kernel(field, k)
    lifts: bool | None = None
    if matrix is not None:
        w = weight_vector(matrix)
        lifts = True
        for b in kernel:
            try:
                g = lift_to_plucker_relation(b, w, n)
            except NoLift as exc:
                lifts = False
                failures.append(("no lift", str(exc)))
                continue
            if plucker_image(n, g) or initial_form(w, g) != b.polynomial():
                lifts = False
                failures.append(("bad lift", b.format(field, n)))
    return SagbiReport(n, label, not bad, dim == dim0, lifts, dim, dim0, len(kernel), failures)


def initial_exponents(matrix: WeightMatrix, k: int | None = None) -> dict[Subset, ExponentMatrix]:
    return {s: initial_term(matrix, s).exponent for s in proper_subsets(matrix.n, k)}
