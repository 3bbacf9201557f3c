import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchfield import standard_basis as sb
from matchfield.algebra import dim_degree2_initial_algebra, phi, pmonomial
from matchfield.combinatorics import MatchingField, Tableau, proper_subsets

from basis_oracle import check_invariants, rows_key, ssyt


def test_classify_examples():
    assert str(sb.classify_flag(Tableau([(4, 1, 5, 6), (2, 3, 4, 7)], 8), 1)) == "1.3B(3)"
    assert str(sb.classify_gr(Tableau([(4, 1, 5, 6), (2, 3, 4, 7)], 8), 1)) == "3B(3)"
    assert str(sb.classify_flag(Tableau([(4, 1, 5, 6, 7, 8), (2, 3, 4, 7)], 8), 1)) == "2.3B(3)"
    assert str(sb.classify_flag(Tableau([(2, 1, 5, 6), (1,)], 6), 1)) == "3D"


def test_type_1_is_fixed():
    t = Tableau([(1, 2, 4), (2, 3, 5)], 6)
    assert str(sb.classify_gr(t, 0)) == "1"
    assert sb.S_gr(t, 0) == t


def test_single_column_not_in_basis():
    assert sb.classify_flag(Tableau([(1, 2)], 4), 2) == sb.NOT_IN_BASIS


def test_not_in_basis_raises():
    t = Tableau([(2, 3), (1, 4)], 5)
    assert not sb.in_basis(t, 0)
    with pytest.raises(sb.NotInBasis):
        sb.S_flag(t, 0)


def test_normalize_examples():
    out = sb.normalize_to_basis(Tableau([(2, 3, 4), (1,)], 6), 3)
    assert out.columns == ((1, 3, 4), (2,)) and str(sb.classify_flag(out, 3)) == "3A(1)"
    out = sb.normalize_to_basis(Tableau([(5, 1, 6), (4,)], 6), 3)
    assert out.columns == ((4, 1, 6), (5,)) and str(sb.classify_flag(out, 3)) == "3C"


def test_final_example_bijection():
    field = MatchingField.block(6, 3)
    assert not Tableau([(3, 1, 6), (4,)], 6).is_valid(field)
    t = Tableau([(4, 1, 6), (3,)], 6)
    assert str(sb.classify_flag(t, 3)) == "3D"
    assert sb.S_flag(t, 3).columns == ((1, 4, 6), (3,))
    assert sb.S_flag_inverse(Tableau([(1, 4, 6), (3,)], 6), 3) == t


def test_leading_entries_in_first_block_fixed():
    s = Tableau([(1, 2, 5), (3,)], 6)
    assert sb.S_flag_inverse(s, 3) == s


def test_inverse_produces_type_3b():
    # i1 in B1, i2 and j1 in B2 with j1 < i2
    s = Tableau([(1, 5, 6), (4,)], 6)
    t = sb.S_flag_inverse(s, 3)
    assert sb.classify_flag(t, 3).base == "3B"
    assert t.columns == ((4, 5, 6), (1,))


def test_gap_case_not_in_basis():
    # rows (3, 2) and (1, 4): j1 < i1 < j2 matches none of the typed conditions
    t = Tableau([(3, 1), (2, 4)], 4)
    assert t.is_valid(MatchingField.block(4, 1))
    assert not sb.in_basis(t, 1)
    u = sb.normalize_to_basis(t, 1)
    assert u.columns == ((2, 1), (3, 4)) and str(sb.classify_flag(u, 1)) == "1.3A"


def test_inverse_rejects_non_semistandard():
    with pytest.raises(ValueError):
        sb.S_flag_inverse(Tableau([(2, 3), (1,)], 4), 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_invariants_exhaustive(n):
    for ell in range(n + 1):
        assert check_invariants(n, ell) == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_basis_size_matches_algebra_dimension(n):
    for ell in range(n + 1):
        assert len(sb.basis(ell, n)) == dim_degree2_initial_algebra(MatchingField.block(n, ell)) == len(ssyt(n))


def test_semistandard_enumeration_agrees():
    for n in range(2, 6):
        assert {t.columns for t in sb.semistandard_two_column(n)} == {t.columns for t in ssyt(n)}


def test_grassmannian_exhaustive_n5_k2():
    for ell in range(6):
        field = MatchingField.block(5, ell)
        members = [t for t in sb.two_column_tableaux(field, 2) if sb.classify_gr(t, ell) != sb.NOT_IN_BASIS]
        images = {sb.S_gr(t, ell).columns for t in members}
        assert len(images) == len(members) == 50


@given(st.data())
def test_normalize_properties(data):
    n = data.draw(st.integers(3, 7))
    ell = data.draw(st.integers(0, n))
    field = MatchingField.block(n, ell)
    subs = proper_subsets(n)
    a, b = data.draw(st.sampled_from(subs)), data.draw(st.sampled_from(subs))
    t = Tableau.from_subsets(field, (a, b))
    u = sb.normalize_to_basis(t, ell)
    assert sb.in_basis(u, ell)
    assert rows_key(u) == rows_key(t)
    assert phi(field, pmonomial(*u.columns))[1] == phi(field, pmonomial(*t.columns))[1]
    assert sb.normalize_to_basis(u, ell) == u
    assert sb.S_flag_inverse(sb.S_flag(u, ell), ell) == u
