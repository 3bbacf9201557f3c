"""Combinatorial isomorphism of polytopes via their vertex-facet incidences.

Two polytopes are combinatorially isomorphic iff there are bijections of
vertices and of facets preserving incidence.  The search refines colours on
the bipartite incidence graph of both polytopes at once, then individualises
one vertex at a time and backtracks when the colour histograms diverge.
"""
from __future__ import annotations

from collections import Counter

import numpy as np

from .hull import Hull, PointConfiguration, convex_hull


def _incidence(obj) -> np.ndarray:
    if isinstance(obj, np.ndarray) and obj.dtype == bool:
        return obj
    if isinstance(obj, PointConfiguration):
        return obj.hull.vertex_incidence
    if isinstance(obj, Hull):
        return obj.vertex_incidence
    return convex_hull(obj).vertex_incidence


class _Graph:
    """Bipartite incidence graph: vertices ``0..V-1``, facets ``V..V+F-1``."""

    def __init__(self, inc: np.ndarray):
        F, V = inc.shape
        self.V, self.F = V, F
        self.adj = [list(V + np.flatnonzero(inc[:, v])) for v in range(V)]
        self.adj += [list(np.flatnonzero(inc[f])) for f in range(F)]

    def initial_colors(self):
        return [("v", len(self.adj[i])) if i < self.V else ("f", len(self.adj[i])) for i in range(self.V + self.F)]


def _relabel(sigs_a, sigs_b):
    table = {s: k for k, s in enumerate(sorted(set(sigs_a) | set(sigs_b)))}
    return [table[s] for s in sigs_a], [table[s] for s in sigs_b]


def _refine(ga: _Graph, gb: _Graph, ca, cb):
    """Equitable refinement of the joint colouring; ``None`` when histograms differ."""
    ca, cb = _relabel(ca, cb)
    while True:
        if Counter(ca) != Counter(cb):
            return None
        sa = [(ca[i], tuple(sorted(ca[j] for j in ga.adj[i]))) for i in range(len(ca))]
        sb = [(cb[i], tuple(sorted(cb[j] for j in gb.adj[i]))) for i in range(len(cb))]
        na, nb = _relabel(sa, sb)
        if len(set(na)) == len(set(ca)):
            if Counter(na) != Counter(nb):
                return None
            return na, nb
        ca, cb = na, nb


def _search(ga: _Graph, gb: _Graph, ca, cb) -> dict | None:
    refined = _refine(ga, gb, ca, cb)
    if refined is None:
        return None
    ca, cb = refined
    classes = Counter(ca)
    if all(c == 1 for c in classes.values()):
        where = {c: i for i, c in enumerate(cb)}
        mapping = {i: where[c] for i, c in enumerate(ca)}
        for i, nbrs in enumerate(ga.adj):
            if sorted(mapping[j] for j in nbrs) != sorted(gb.adj[mapping[i]]):
                return None
        return mapping
    # individualise inside the smallest non-trivial class, preferring vertices
    target = min((c for c, k in classes.items() if k > 1), key=lambda c: (classes[c], c))
    i = ca.index(target)
    fresh = max(max(ca), max(cb)) + 1
    for j in (j for j, c in enumerate(cb) if c == target):
        na, nb = list(ca), list(cb)
        na[i] = fresh
        nb[j] = fresh
        found = _search(ga, gb, na, nb)
        if found is not None:
            return found
    return None


def isomorphism(a, b) -> dict | None:
    """A vertex bijection ``{vertex of a: vertex of b}`` preserving facets, or ``None``."""
    ia, ib = _incidence(a), _incidence(b)
    if ia.shape != ib.shape:
        return None
    ga, gb = _Graph(ia), _Graph(ib)
    mapping = _search(ga, gb, ga.initial_colors(), gb.initial_colors())
    if mapping is None:
        return None
    return {i: mapping[i] for i in range(ga.V)}


def combinatorially_isomorphic(a, b) -> bool:
    return isomorphism(a, b) is not None


def check_isomorphism(a, b, mapping: dict) -> bool:
    """Independent check that ``mapping`` sends the facets of ``a`` onto those of ``b``."""
    ia, ib = _incidence(a), _incidence(b)
    if sorted(mapping) != list(range(ia.shape[1])) or sorted(mapping.values()) != list(range(ib.shape[1])):
        return False
    fa = {frozenset(mapping[v] for v in np.flatnonzero(row)) for row in ia}
    fb = {frozenset(np.flatnonzero(row).tolist()) for row in ib}
    return fa == fb
