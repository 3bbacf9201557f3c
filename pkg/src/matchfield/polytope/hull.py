"""Point configurations of block diagonal matching fields and their exact convex hulls."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from .. import exact
from ..combinatorics import MatchingField, Subset, proper_subsets
from ..weights import WeightMatrix, initial_term, weight_matrix_block
from . import _kernels

_INT64_SAFE = 2**62


@dataclass(frozen=True, eq=False)
class PointConfiguration:
    """Exponent vectors of the initial terms of all Plücker forms, one row per subset."""

    n: int
    ell: int | None
    subsets: tuple[Subset, ...]
    points: np.ndarray

    @property
    def ambient_dim(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]

    @cached_property
    def hull(self) -> "Hull":
        return convex_hull(self.points)

    def permuted(self, perm) -> "PointConfiguration":
        """Same configuration with ambient coordinates reordered by ``perm``."""
        return PointConfiguration(self.n, self.ell, self.subsets, self.points[:, np.asarray(perm)])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "subsets": [list(s) for s in self.subsets],
            "points": self.points.tolist(),
        }


def matching_field_polytope(n: int, ell: int, matrix: WeightMatrix | None = None) -> PointConfiguration:
    """Point configuration of ``B_ell``: one 0/1 exponent vector per proper subset."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= ell <= n:
        raise ValueError(f"ell must lie in 0..{n}")
    M = matrix or weight_matrix_block(n, ell)
    field_ = MatchingField.block(n, ell)
    subsets = tuple(proper_subsets(n))
    rows = []
    for s in subsets:
        rep = initial_term(M, s)
        assert rep.permutation == field_.permutation(s), f"M_{ell} does not induce B_{ell} on {s}"
        rows.append(rep.exponent.vector())
    return PointConfiguration(n, ell, subsets, np.array(rows, dtype=np.int64))


@dataclass(eq=False)
class Hull:
    """Exact H-representation of ``conv(points)`` inside its affine hull.

    ``normals @ p <= offsets`` holds for every input point ``p``, with equality
    exactly on the points flagged in the matching row of ``incidence``.
    ``equations`` rows ``(c, c0)`` satisfy ``c @ p + c0 = 0`` on the affine hull.
    """

    points: np.ndarray
    dim: int
    normals: np.ndarray
    offsets: np.ndarray
    incidence: np.ndarray
    equations: np.ndarray
    coordinates: tuple[int, ...]
    vertices: np.ndarray = field(init=False)

    def __post_init__(self):
        self.vertices = _vertices(self.incidence, self.points.shape[0], self.dim)

    @property
    def n_facets(self) -> int:
        return self.normals.shape[0]

    def is_vertex(self, i: int) -> bool:
        return bool(np.isin(i, self.vertices))

    @property
    def vertex_incidence(self) -> np.ndarray:
        """Facet by vertex incidence restricted to the vertices."""
        return self.incidence[:, self.vertices]

    def facets_json(self) -> list[dict]:
        return [
            {"normal": a.tolist(), "offset": int(b), "vertices": np.flatnonzero(row).tolist()}
            for a, b, row in zip(self.normals, self.offsets, self.incidence)
        ]


def _vertices(incidence: np.ndarray, m: int, dim: int) -> np.ndarray:
    if dim == 0:
        return np.arange(min(m, 1))
    out = []
    for i in range(m):
        rows = incidence[:, i]
        common = incidence[rows].all(axis=0)
        if common.sum() == 1:
            out.append(i)
    return np.array(out, dtype=np.int64)


def _affine_frame(points: np.ndarray) -> tuple[int, tuple[int, ...], np.ndarray]:
    base = points - points[0]
    piv = exact.pivot_columns(base.tolist())
    equations = exact.nullspace(np.hstack([points, np.ones((points.shape[0], 1), dtype=np.int64)]).tolist())
    return len(piv), tuple(piv), np.array(equations, dtype=np.int64).reshape(-1, points.shape[1] + 1)


def _primitive_rows(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        out = []
        for row in a:
            g = 0
            for x in row:
                g = gcd(g, int(x))
            out.append([int(x) // g for x in row] if g > 1 else [int(x) for x in row])
        return np.array(out, dtype=object).reshape(a.shape)
    g = np.gcd.reduce(np.abs(a), axis=1)
    g[g == 0] = 1
    return a // g[:, None]


def convex_hull(points, which: str | None = None) -> Hull:
    """Exact convex hull by double description of the cone ``{(a, b): a.p <= b}``."""
    P = np.asarray(points, dtype=np.int64)
    m = P.shape[0]
    if m == 0:
        raise ValueError("at least one point is required")
    d, coords, equations = _affine_frame(P)
    if d == 0:
        empty = np.zeros((0, P.shape[1]), dtype=np.int64)
        return Hull(P, 0, empty, np.zeros(0, dtype=np.int64), np.zeros((0, m), dtype=bool), equations, coords)
    X = P[:, list(coords)]
    G = np.hstack([X, -np.ones((m, 1), dtype=np.int64)])

    simplex = exact.independent_rows(G.tolist())
    H0 = G[simplex]
    inv = exact.inverse(H0.tolist())
    rays = [exact.primitive([-inv[i][j] for i in range(d + 1)]) for j in range(d + 1)]
    big = max(abs(int(x)) for r in rays for x in r) * max(1, int(np.abs(G).max())) * (d + 1) >= _INT64_SAFE
    rays = np.array(rays, dtype=object if big else np.int64)
    gmax = max(1, int(np.abs(G).max()))

    words = max(1, -(-m // 64))
    tight = np.zeros((d + 1, words), dtype=np.uint64)
    for j in range(d + 1):
        for pos, idx in enumerate(simplex):
            if pos != j:
                tight[j, idx // 64] |= np.uint64(1) << np.uint64(idx % 64)

    in_simplex = set(simplex)
    for idx in (i for i in range(m) if i not in in_simplex):
        if rays.dtype != object and int(np.abs(rays).max()) * gmax * (d + 1) >= _INT64_SAFE:
            rays = rays.astype(object)
        g = G[idx] if rays.dtype != object else G[idx].astype(object)
        vals = rays @ g
        pos = np.flatnonzero(vals > 0)
        if pos.size == 0:
            zero = np.flatnonzero(vals == 0)
            tight[zero, idx // 64] |= np.uint64(1) << np.uint64(idx % 64)
            continue
        neg = np.flatnonzero(vals < 0)
        zero = np.flatnonzero(vals == 0)
        pairs = _kernels.adjacent_pairs(tight, pos, neg, d - 1, which)
        bit = np.uint64(1) << np.uint64(idx % 64)
        keep = np.concatenate([neg, zero])
        new_tight = [tight[keep]]
        new_rays = [rays[keep]]
        if pairs.shape[0]:
            p, q = pairs[:, 0], pairs[:, 1]
            vp, vq = vals[p][:, None], vals[q][:, None]
            bound = int(np.abs(vals).max()) * int(np.abs(rays).max()) * 2
            if rays.dtype != object and bound >= _INT64_SAFE:
                rays, vals = rays.astype(object), vals.astype(object)
                vp, vq = vp.astype(object), vq.astype(object)
                new_rays = [r.astype(object) for r in new_rays]
            comb = vp * rays[q] - vq * rays[p]
            new_rays.append(_primitive_rows(comb))
            t = tight[p] & tight[q]
            t[:, idx // 64] |= bit
            new_tight.append(t)
        tight = np.concatenate(new_tight)
        tight[len(neg):len(keep), idx // 64] |= bit
        rays = np.concatenate(new_rays)

    incidence = _kernels.from_bitsets(tight, m)
    order = _sort_rows(rays)
    rays, incidence = rays[order], incidence[order]
    normals = np.zeros((rays.shape[0], P.shape[1]), dtype=rays.dtype)
    normals[:, list(coords)] = rays[:, :d]
    return Hull(P, d, normals, rays[:, d], incidence, equations, coords)


def _sort_rows(a: np.ndarray) -> np.ndarray:
    keys = [tuple(int(x) for x in row) for row in a]
    return np.array(sorted(range(len(keys)), key=keys.__getitem__), dtype=np.int64)


def vertex_certificate(points, i: int) -> np.ndarray | None:
    """A linear functional maximised uniquely at point ``i``, for 0/1 configurations.

    For a 0/1 point ``p`` the functional ``2p - 1`` takes value ``|p|`` at ``p``
    and strictly less at every other 0/1 point.  The claim is checked exactly
    and ``None`` is returned if it fails.
    """
    P = np.asarray(points, dtype=np.int64)
    c = 2 * P[i] - 1
    vals = P @ c
    others = np.delete(vals, i)
    if others.size and others.max() >= vals[i]:
        return None
    return c


def all_points_are_vertices(points) -> bool:
    P = np.asarray(points)
    if not np.isin(P, (0, 1)).all():
        raise ValueError("vertex certificates need a 0/1 configuration")
    if len({tuple(r) for r in P.tolist()}) != P.shape[0]:
        return False
    return all(vertex_certificate(P, i) is not None for i in range(P.shape[0]))
