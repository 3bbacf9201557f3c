import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms import isomorphism as nxiso
from scipy.spatial import ConvexHull

from matchfield.polytope import (
    all_points_are_vertices,
    check_isomorphism,
    combinatorially_isomorphic,
    convex_hull,
    euler_characteristic_ok,
    f_vector,
    face_lattice,
    isomorphism,
    matching_field_polytope,
    vertex_certificate,
)
from matchfield.reproduce import golden

TABLE = golden("table_1.json")["rows"]


def test_point_counts_and_shape():
    for n in range(2, 7):
        for ell in range(n + 1):
            pc = matching_field_polytope(n, ell)
            assert len(pc) == 2**n - 2 and pc.ambient_dim == (n - 1) * n
            assert set(np.unique(pc.points)) <= {0, 1}
            for s, p in zip(pc.subsets, pc.points):
                rows = p.reshape(n - 1, n).sum(axis=1)
                assert rows.tolist() == [1] * len(s) + [0] * (n - 1 - len(s))


def test_n3_ell0_p13():
    pc = matching_field_polytope(3, 0)
    row = pc.points[pc.subsets.index((1, 3))].reshape(2, 3)
    assert row.tolist() == [[1, 0, 0], [0, 0, 1]]


def test_segment():
    h = matching_field_polytope(2, 0).hull
    assert h.dim == 1 and len(h.vertices) == 2 and h.n_facets == 2
    assert f_vector(matching_field_polytope(2, 0)) == (2,)


def test_degenerate_inputs():
    h = convex_hull([[1, 2, 3]])
    assert h.dim == 0 and h.vertices.tolist() == [0]
    h = convex_hull([[0, 0], [1, 1], [2, 2]])
    assert h.dim == 1 and h.vertices.tolist() == [0, 2]
    with pytest.raises(ValueError):
        convex_hull(np.zeros((0, 2), dtype=int))
    with pytest.raises(ValueError):
        matching_field_polytope(3, 4)


def test_square_with_interior_point():
    h = convex_hull([[0, 0], [2, 0], [0, 2], [2, 2], [1, 1], [1, 0]])
    assert sorted(h.vertices.tolist()) == [0, 1, 2, 3]
    assert h.n_facets == 4
    assert f_vector(h) == (4, 4)


@pytest.mark.parametrize("n,ell,facets", [(4, 0, 12), (5, 2, 26)])
def test_facet_counts(n, ell, facets):
    assert matching_field_polytope(n, ell).hull.n_facets == facets


@pytest.mark.parametrize("n,ell,dim", [(3, 0, 4), (4, 1, 8), (5, 0, 13), (6, 3, 19), (7, 0, 26)])
def test_affine_dimension(n, ell, dim):
    assert matching_field_polytope(n, ell).hull.dim == dim


@pytest.mark.parametrize("row", [r for r in TABLE if r["n"] <= 4], ids=lambda r: f"n{r['n']}-ell{r['ell']}")
def test_table_rows_small(row):
    for ell in row["ell"]:
        assert list(f_vector(matching_field_polytope(row["n"], ell))) == row["f_vector"]


def test_table_rows_n5():
    for row in (r for r in TABLE if r["n"] == 5):
        for ell in row["ell"]:
            fv = f_vector(matching_field_polytope(5, ell))
            assert list(fv) == row["f_vector"]
            assert euler_characteristic_ok(fv)


def test_facet_inequalities_exact():
    for n, ell in [(4, 2), (5, 1), (6, 4)]:
        pc = matching_field_polytope(n, ell)
        h = pc.hull
        vals = pc.points @ h.normals.T
        assert (vals <= h.offsets).all()
        assert ((vals == h.offsets).T == h.incidence).all()
        for c in h.equations:
            assert (pc.points @ c[:-1] + c[-1] == 0).all()
        assert h.equations.shape[0] == pc.ambient_dim - h.dim


def _qhull_facets(points):
    P = np.asarray(points, dtype=float)
    base = P - P[0]
    u, s, vt = np.linalg.svd(base)
    rank = int((s > 1e-9).sum())
    Y = base @ vt[:rank].T
    hull = ConvexHull(Y)
    return len({tuple(np.round(e, 6)) for e in hull.equations})


@pytest.mark.parametrize("n", [3, 4])
def test_facet_count_matches_qhull(n):
    for ell in range(n + 1):
        pc = matching_field_polytope(n, ell)
        assert pc.hull.n_facets == _qhull_facets(pc.points)


def test_permutation_invariance():
    rng = np.random.default_rng(7)
    for n, ell in [(4, 1), (5, 3)]:
        pc = matching_field_polytope(n, ell)
        q = pc.permuted(rng.permutation(pc.ambient_dim))
        assert f_vector(q) == f_vector(pc)
        assert q.hull.n_facets == pc.hull.n_facets


def test_point_order_invariance():
    pc = matching_field_polytope(4, 2)
    rng = np.random.default_rng(3)
    order = rng.permutation(len(pc))
    assert f_vector(convex_hull(pc.points[order])) == f_vector(pc)


def test_face_lattice_structure():
    lat = face_lattice(matching_field_polytope(4, 0))
    assert lat.f_vector[0] == 14 and len(lat.faces(0)) == 14
    assert all(len(f) == 1 for f in lat.faces(0))
    edges = lat.faces(1)
    assert all(len(e) == 2 for e in edges)


@pytest.mark.parametrize("n", range(2, 7))
def test_vertex_certificates(n):
    for ell in range(n + 1):
        pc = matching_field_polytope(n, ell)
        assert all_points_are_vertices(pc.points)
        assert len(pc.hull.vertices) == 2**n - 2


def test_vertex_certificate_rejects_interior():
    pts = np.array([[0, 0], [1, 1], [1, 0], [0, 1]])
    assert vertex_certificate(pts, 0) is not None
    with pytest.raises(ValueError):
        all_points_are_vertices([[0, 2]])
    assert not all_points_are_vertices([[0, 1], [0, 1]])


def _nx_isomorphic(inc_a, inc_b):
    def graph(inc):
        g = nx.Graph()
        F, V = inc.shape
        g.add_nodes_from((("v", i) for i in range(V)), side="v")
        g.add_nodes_from((("f", j) for j in range(F)), side="f")
        g.add_edges_from((("f", j), ("v", i)) for j, i in zip(*np.nonzero(inc)))
        return g

    gm = nxiso.GraphMatcher(graph(inc_a), graph(inc_b), node_match=lambda x, y: x["side"] == y["side"])
    return gm.is_isomorphic()


@pytest.mark.parametrize("n", [3, 4])
def test_isomorphism_against_networkx(n):
    hulls = {ell: matching_field_polytope(n, ell).hull for ell in range(n + 1)}
    for a, b in itertools.combinations(range(n + 1), 2):
        ours = combinatorially_isomorphic(hulls[a], hulls[b])
        assert ours == _nx_isomorphic(hulls[a].vertex_incidence, hulls[b].vertex_incidence)
        if ours:
            assert check_isomorphism(hulls[a], hulls[b], isomorphism(hulls[a], hulls[b]))


def test_isomorphism_grouping_n5():
    hulls = {ell: matching_field_polytope(5, ell).hull for ell in range(6)}
    same = {(3, 4), (0, 5)}
    for a, b in itertools.combinations(range(6), 2):
        assert combinatorially_isomorphic(hulls[a], hulls[b]) == ((a, b) in same)


@pytest.mark.parametrize("n", [6, 7])
def test_distinct_for_larger_n(n):
    hulls = {ell: matching_field_polytope(n, ell).hull for ell in range(n)}
    for a, b in itertools.combinations(range(n), 2):
        assert not combinatorially_isomorphic(hulls[a], hulls[b])
    assert combinatorially_isomorphic(matching_field_polytope(n, n).hull, hulls[0])


incidences = st.tuples(st.integers(2, 7), st.integers(2, 7)).flatmap(
    lambda s: st.lists(st.lists(st.booleans(), min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0])
).map(lambda rows: np.array(rows, dtype=bool))


@given(incidences, st.randoms(use_true_random=False))
def test_isomorphism_of_permuted_incidence(inc, rnd):
    rows = list(range(inc.shape[0]))
    cols = list(range(inc.shape[1]))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    other = inc[rows][:, cols]
    m = isomorphism(inc, other)
    assert m is not None and check_isomorphism(inc, other, m)


@given(incidences, st.data())
def test_isomorphism_agrees_with_networkx_random(inc, data):
    other = inc.copy()
    i = data.draw(st.integers(0, inc.shape[0] - 1))
    j = data.draw(st.integers(0, inc.shape[1] - 1))
    other[i, j] = not other[i, j]
    k = data.draw(st.integers(0, inc.shape[0] - 1))
    other[[i, k]] = other[[k, i]]
    assert (isomorphism(inc, other) is not None) == _nx_isomorphic(inc, other)


@given(st.integers(2, 4).flatmap(lambda d: st.lists(
    st.lists(st.integers(-6, 6), min_size=d, max_size=d), min_size=d + 2, max_size=14, unique_by=tuple)))
def test_random_hulls_match_qhull(rows):
    pts = np.array(rows)
    if np.linalg.matrix_rank(pts[1:] - pts[0]) < pts.shape[1]:
        return
    h = convex_hull(pts)
    ref = ConvexHull(pts.astype(float))
    assert sorted(h.vertices.tolist()) == sorted(ref.vertices.tolist())
    assert h.n_facets == len({tuple(np.round(e, 9)) for e in ref.equations})
    assert euler_characteristic_ok(f_vector(h), h.dim)
