"""Monomials in the variables ``x_ij`` of an ``(n-1) x n`` matrix."""
from __future__ import annotations

from typing import Iterable

import numpy as np


class ExponentMatrix:
    """Exponent matrix of a monomial, stored as a sorted multiset of flat cell indices.

    Cell ``(i, j)`` (1-based row and column) has flat index ``(i - 1) * n + (j - 1)``.
    """

    __slots__ = ("n", "cells")

    def __init__(self, n: int, cells: Iterable[int] = ()):
        self.n = n
        self.cells = tuple(sorted(cells))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "ExponentMatrix":
        cells = []
        for i, j in pairs:
            if not (1 <= i <= n - 1 and 1 <= j <= n):
                raise ValueError(f"x_{i}{j} is not a variable for n={n}")
            cells.append((i - 1) * n + (j - 1))
        return cls(n, cells)

    def __add__(self, other: "ExponentMatrix") -> "ExponentMatrix":
        if self.n != other.n:
            raise ValueError("exponent matrices of different size")
        return ExponentMatrix(self.n, self.cells + other.cells)

    def __eq__(self, other):
        return isinstance(other, ExponentMatrix) and self.n == other.n and self.cells == other.cells

    def __hash__(self):
        return hash((self.n, self.cells))

    def __lt__(self, other):
        return self.cells < other.cells

    def __repr__(self):
        return f"ExponentMatrix({self})"

    def __str__(self):
        if not self.cells:
            return "1"
        parts = []
        for c in sorted(set(self.cells)):
            i, j = divmod(c, self.n)
            e = self.cells.count(c)
            parts.append(f"x{i + 1}{j + 1}" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    @property
    def degree(self) -> int:
        return len(self.cells)

    def pairs(self) -> list[tuple[int, int]]:
        return [(c // self.n + 1, c % self.n + 1) for c in self.cells]

    def vector(self) -> np.ndarray:
        v = np.zeros((self.n - 1) * self.n, dtype=np.int64)
        np.add.at(v, list(self.cells), 1)
        return v

    def matrix(self) -> list[list[int]]:
        return self.vector().reshape(self.n - 1, self.n).tolist()
