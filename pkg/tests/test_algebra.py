import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchfield.algebra import (
    NoLift,
    SignedBinomial,
    degree2_kernel,
    dim_degree2_initial_algebra,
    format_polynomial,
    initial_form,
    lift_to_plucker_relation,
    parse_polynomial,
    phi,
    plucker_degree2_rank,
    plucker_image,
    pmonomial,
    same_up_to_sign,
    sagbi_certificate_degree2,
)
from matchfield.combinatorics import MatchingField, proper_subsets
from matchfield.reproduce import golden
from matchfield.weights import weight_matrix_block, weight_vector

# frozen from a brute-force count of two-column semistandard tableaux
SSYT_DEGREE2 = {2: 3, 3: 20, 4: 95, 5: 399, 6: 1589}


def ssyt_pairs(n):
    subs = proper_subsets(n)
    return sum(
        1
        for a, b in itertools.product(subs, repeat=2)
        if len(a) >= len(b) and all(a[r] <= b[r] for r in range(len(b)))
    )


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_frozen_ssyt_counts(n):
    assert ssyt_pairs(n) == SSYT_DEGREE2[n]


N3_IDEALS = {0: "P1*P23 - P2*P13", 1: "P3*P12 - P2*P13", 2: "P1*P23 + P3*P12"}


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_n3_ideals(ell):
    kernel = degree2_kernel(MatchingField.block(3, ell))
    assert len(kernel) == 1
    assert same_up_to_sign(parse_polynomial(N3_IDEALS[ell]), kernel[0].polynomial())


def test_n3_ideal_ell3_equals_diagonal():
    assert degree2_kernel(MatchingField.block(3, 3)) == degree2_kernel(MatchingField.diagonal(3))


def test_flag4_generators():
    g = golden("example_2_3.json")
    field = MatchingField.block(4, 3)
    kernel = degree2_kernel(field)
    assert len(kernel) == 10
    hits = 0
    for gen in g["generators"]:
        poly = parse_polynomial(gen["text"])
        found = any(same_up_to_sign(poly, b.polynomial()) for b in kernel)
        if gen.get("disputed"):
            assert not found
        else:
            assert found
            hits += 1
    assert hits == 9
    assert any(same_up_to_sign(parse_polynomial("P12*P43 - P13*P42"), b.polynomial()) for b in kernel)


def test_parse_uses_arranged_names():
    f = MatchingField.block(4, 3)
    p = parse_polynomial("P42*P13 - P12*P43", f)
    assert pmonomial((2, 4), (1, 3)) in p


@pytest.mark.parametrize("n", [3, 4, 5])
def test_format_parse_round_trip(n):
    for ell in range(n + 1):
        f = MatchingField.block(n, ell)
        for b in degree2_kernel(f):
            text = b.format(f, n)
            assert parse_polynomial(text, f) == b.polynomial()
            assert format_polynomial(parse_polynomial(text, f), f, n) == text


def test_signed_binomial_rejects_equal_terms():
    m = pmonomial((1,), (2, 3))
    with pytest.raises(ValueError):
        SignedBinomial.make(m, 1, m, -1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dimension_equalities(n):
    dims = {dim_degree2_initial_algebra(MatchingField.block(n, ell)) for ell in range(n + 1)}
    assert dims == {SSYT_DEGREE2[n]}
    assert plucker_degree2_rank(n) == SSYT_DEGREE2[n]


def test_dimension_n6_diagonal():
    assert dim_degree2_initial_algebra(MatchingField.diagonal(6)) == SSYT_DEGREE2[6]


def test_kernel_elements_are_killed():
    for ell in range(5):
        f = MatchingField.block(4, ell)
        for b in degree2_kernel(f):
            s1, e1 = phi(f, b.first)
            s2, e2 = phi(f, b.second)
            assert e1 == e2 and s1 + b.c2 * s2 == 0


def test_lift_is_plucker_relation():
    n, ell = 4, 2
    w = weight_vector(weight_matrix_block(n, ell))
    for b in degree2_kernel(MatchingField.block(n, ell)):
        g = lift_to_plucker_relation(b, w, n)
        assert plucker_image(n, g) == {}
        assert initial_form(w, g) == b.polynomial()


def test_lift_fails_for_non_initial_binomial():
    w = weight_vector(weight_matrix_block(3, 0))
    b = SignedBinomial.make(pmonomial((1,), (2, 3)), 1, pmonomial((3,), (1, 2)), -1)
    with pytest.raises(NoLift):
        lift_to_plucker_relation(b, w, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sagbi_certificate_small(n):
    for ell in range(n + 1):
        rep = sagbi_certificate_degree2(n, ell)
        assert rep.certified, rep.failures
        assert rep.to_json()["certified"]


def test_sagbi_certificate_flags_counterexample_field():
    ids = [(1, 4), (2, 5), (3, 6), (3, 4), (1, 5), (2, 6)]
    f = MatchingField.from_identity_set(6, ids)
    rep = sagbi_certificate_degree2(6, field=f, max_columns=3, k=2)
    assert not rep.quadratic_generation
    assert rep.lifts_exist is None


@given(st.integers(3, 5), st.data())
def test_plucker_image_linear(n, data):
    subs = proper_subsets(n)
    a = pmonomial(*data.draw(st.lists(st.sampled_from(subs), min_size=2, max_size=2)))
    b = pmonomial(*data.draw(st.lists(st.sampled_from(subs), min_size=2, max_size=2)))
    ia, ib = plucker_image(n, {a: 1}), plucker_image(n, {b: 1})
    both = plucker_image(n, {a: 2, b: -3} if a != b else {a: -1})
    expected = {}
    for img, c in ((ia, 2), (ib, -3)) if a != b else ((ia, -1),):
        for e, v in img.items():
            expected[e] = expected.get(e, 0) + c * v
    assert both == {e: v for e, v in expected.items() if v}
