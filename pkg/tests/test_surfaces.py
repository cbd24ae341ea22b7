"""Twist actions on surface cohomology: conventions, composition, fixed ranks."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geographer import linalg
from geographer.surfaces import (
    Twist,
    TwistWord,
    a_curve,
    b_curve,
    bundle_monodromy_word,
    class_symbol,
    compose_word,
    homology_action,
    intersection_form,
    invariant_subspace,
    is_symplectic,
    twist_transvection,
)
from strategies import primitive_curves, twist_words


def test_intersection_form_frozen():
    assert intersection_form(1).tolist() == [[0, 1], [-1, 0]]
    j2 = intersection_form(2)
    assert j2.tolist() == [
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    assert (j2 @ j2 == -linalg.identity(4)).all()
    assert linalg.det(j2) == 1
    assert (j2.T == -j2).all()


def test_intersection_form_rejects_genus_zero():
    with pytest.raises(ValueError):
        intersection_form(0)


def test_twist_along_a1_matches_pinned_convention():
    # the sign convention: alpha_1 -> alpha_1 + beta_1, beta_1 fixed
    m = twist_transvection(a_curve(1, 1), 1)
    assert m.tolist() == [[1, 0], [1, 1]]


def test_twist_along_b2_genus_two():
    m = twist_transvection(b_curve(2, 2), 2)
    assert m.tolist() == [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, -1],
        [0, 0, 0, 1],
    ]
    assert is_symplectic(m)
    # the first handle block is fixed pointwise
    assert (m[:2, :2] == linalg.identity(2)).all()
    assert (m[:2, 2:] == 0).all() and (m[2:, :2] == 0).all()


def test_twist_rejects_bad_curves():
    with pytest.raises(ValueError):
        twist_transvection((2, 0), 1)  # not primitive
    with pytest.raises(ValueError):
        twist_transvection((0, 0), 1)  # zero
    with pytest.raises(ValueError):
        twist_transvection((1, 0, 0, 0), 1)  # wrong length
    with pytest.raises(ValueError):
        Twist((1, 0), 0)  # zero power


@given(st.integers(1, 3).flatmap(lambda g: st.tuples(st.just(g), primitive_curves(g))),
       st.integers(-3, 3).filter(bool))
def test_twist_inverse_law(genus_curve, power):
    genus, curve = genus_curve
    m = twist_transvection(curve, genus, power)
    m_inverse = twist_transvection(curve, genus, -power)
    assert (m @ m_inverse == linalg.identity(2 * genus)).all()


def test_disjoint_handle_twists_commute():
    g = 3
    for c1, c2 in [(a_curve(1, g), b_curve(3, g)), (b_curve(1, g), a_curve(2, g))]:
        m1 = twist_transvection(c1, g)
        m2 = twist_transvection(c2, g)
        assert (m1 @ m2 == m2 @ m1).all()


def test_empty_word_is_identity():
    assert (compose_word(TwistWord(2)) == linalg.identity(4)).all()


def test_word_followed_by_inverse_is_identity():
    word = TwistWord(2, (Twist(a_curve(1, 2)), Twist(b_curve(2, 2), -1)))
    combined = TwistWord(2, word.letters + word.inverse().letters)
    assert (compose_word(combined) == linalg.identity(4)).all()


def test_bundle_word_letters_frozen():
    word = bundle_monodromy_word(1, 1, 2)
    assert [(class_symbol(l.curve, 2), l.power) for l in word.letters] == [
        ("b2", 1),
        ("a2", -1),
        ("a1", 1),
    ]
    word = bundle_monodromy_word(2, 3, 4)
    assert [(class_symbol(l.curve, 4), l.power) for l in word.letters] == [
        ("b4", 1),
        ("a4", -1),
        ("a2", 1),
        ("a1", 1),
    ]
    assert bundle_monodromy_word(0, 2, 2).letters == ()
    assert bundle_monodromy_word(0, 3, 3).letters == ()


def test_bundle_word_rejects_bad_weights():
    for d, k, g in [(1, 0, 2), (0, 3, 2), (-1, 0, 2), (0, 0, 0)]:
        with pytest.raises(ValueError):
            bundle_monodromy_word(d, k, g)


def test_bundle_monodromy_frozen_matrix():
    m = compose_word(bundle_monodromy_word(1, 1, 2))
    assert m.tolist() == [
        [1, 0, 0, 0],
        [1, 1, 0, 0],
        [0, 0, 1, -1],
        [0, 0, -1, 2],
    ]
    assert linalg.det(m) == 1
    assert is_symplectic(m)
    assert invariant_subspace(m).tolist() == [[0, 1, 0, 0]]


def test_fixed_subspace_of_identity():
    assert invariant_subspace(linalg.identity(4)).shape[0] == 4


def test_untwisted_pair_block_has_no_fixed_vector():
    m = compose_word(bundle_monodromy_word(0, 0, 2))
    assert invariant_subspace(m).shape[0] == 0


def test_fixed_subspace_rank_formula_on_grid():
    # dim ker(M - I) = 2k - d, by two independent eliminations
    for g in range(1, 7):
        for k in range(0, g + 1):
            for d in range(0, k + 1):
                m = compose_word(bundle_monodromy_word(d, k, g))
                a = m - linalg.identity(2 * g)
                from_smith = 2 * g - linalg.rank(a)
                from_fractions = 2 * g - linalg.rational_rank(a)
                assert from_smith == from_fractions == 2 * k - d, (d, k, g)


def test_fixed_subspace_spans_expected_classes():
    d, k, g = 2, 4, 5
    m = compose_word(bundle_monodromy_word(d, k, g))
    expected = [b_curve(i, g) for i in range(1, d + 1)]
    for i in range(d + 1, k + 1):
        expected.extend([a_curve(i, g), b_curve(i, g)])
    a = m - linalg.identity(2 * g)
    for vec in expected:
        column = linalg.to_matrix([vec]).T
        assert (a @ column == 0).all()
    assert invariant_subspace(m).shape[0] == len(expected)
    assert linalg.elementary_divisors(expected) == ()


@given(twist_words())
def test_words_compose_to_symplectic_matrices(word):
    m = compose_word(word)
    assert is_symplectic(m)


@given(twist_words(max_genus=3, max_letters=4))
def test_homology_action_is_adjoint_and_symplectic(word):
    m = compose_word(word)
    h1 = homology_action(m)
    assert (h1 == m.T).all()
    j = intersection_form(word.genus)
    assert (h1.T @ j @ h1 == j).all()


def test_class_symbol_rendering():
    assert class_symbol((0, 1, 0, 0), 2) == "b1"
    assert class_symbol((1, 0, -2, 0), 2) == "a1-2*a2"
    assert class_symbol((0, 0, 0, 0), 2) == "0"
    assert class_symbol((-1, 3, 0, 0), 2) == "-a1+3*b1"
