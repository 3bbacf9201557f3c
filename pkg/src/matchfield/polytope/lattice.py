"""Face lattices and f-vectors from vertex-facet incidences."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .hull import Hull, PointConfiguration, convex_hull


@dataclass(eq=False)
class FaceLattice:
    """Proper nonempty faces graded by dimension.

    ``levels[j]`` holds the faces of dimension ``j`` as packed vertex bitsets
    (bit ``i`` marks the ``i``-th vertex of the hull).
    """

    dim: int
    n_vertices: int
    levels: list[np.ndarray]

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(int(level.shape[0]) for level in self.levels)

    def faces(self, j: int) -> list[tuple[int, ...]]:
        """Faces of dimension ``j`` as sorted tuples of vertex positions."""
        mask = _kernels.from_bitsets(self.levels[j], self.n_vertices)
        return [tuple(np.flatnonzero(row).tolist()) for row in mask]


def _as_hull(obj) -> Hull:
    if isinstance(obj, Hull):
        return obj
    if isinstance(obj, PointConfiguration):
        return obj.hull
    return convex_hull(obj)


def face_lattice(obj, which: str | None = None) -> FaceLattice:
    """Face lattice by descending from facets through maximal facet intersections."""
    hull = _as_hull(obj)
    d = hull.dim
    nv = len(hull.vertices)
    if d == 0:
        return FaceLattice(0, nv, [])
    facets = _kernels.to_bitsets(hull.vertex_incidence)
    levels = [None] * d
    levels[d - 1] = _kernels.unique_rows(facets)
    for j in range(d - 1, 0, -1):
        levels[j - 1] = _kernels.subfaces(levels[j], facets, which)
    return FaceLattice(d, nv, levels)


def f_vector(obj, which: str | None = None) -> tuple[int, ...]:
    """Face counts ``(f_0, ..., f_{d-1})`` of the hull of a configuration."""
    return face_lattice(obj, which).f_vector


def euler_characteristic_ok(fvec, dim: int | None = None) -> bool:
    """Euler's relation ``sum (-1)^i f_i = 1 - (-1)^d`` for a ``d``-polytope."""
    d = len(fvec) if dim is None else dim
    return sum((-1) ** i * f for i, f in enumerate(fvec)) == 1 - (-1) ** d
