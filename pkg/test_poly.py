"""
Test Polynomials, Demazure Operators and Permutations
Truncated curve arithmetic, divided differences and coset enumeration
"""

import pytest
from hypothesis import given, settings, strategies as st

from algebra.combinatorics import (
    coset_reps,
    double_coset_reps,
    from_word,
    is_reduced,
    length,
    reduced_word,
    w0,
    w0ab,
)
from algebra.demazure import delta_demazure, demazure, demazure_w0ab, demazure_word, shuffle_sum_oracle
from algebra.poly import Polynomial, elementary_symmetric, invariant_basis, is_invariant, monomials_of_degree
from models.ring import Composition, RingSpec, compositions
from runtime.errors import InputError, RingMismatchError


PLAIN3 = RingSpec(flavor='plain', n=3)
CURVE2 = RingSpec(flavor='curve', n=2)

exponents = st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3)
plain_polys = st.lists(st.tuples(exponents, st.integers(min_value=-3, max_value=3)), min_size=1, max_size=4).map(
    lambda terms: Polynomial.from_terms(PLAIN3, {tuple(e): c for e, c in terms})
)


def y(i: int) -> Polynomial:
    return Polynomial.gen(PLAIN3, 'y', i)


# ============================================================================
# Rings
# ============================================================================

def test_curve_classes_square_to_zero():
    c1 = Polynomial.gen(CURVE2, 'c', 1)
    assert (c1 * c1).is_zero()
    assert (c1 + 1) ** 3 == c1 * 3 + 1


def test_monomial_counts():
    assert len(monomials_of_degree(RingSpec(flavor='plain', n=2), 4)) == 3
    # x^2 and x c; c^2 vanishes
    assert len(monomials_of_degree(RingSpec(flavor='curve', n=1), 4)) == 2
    assert monomials_of_degree(PLAIN3, -2) == ()
    assert monomials_of_degree(PLAIN3, 3) == ()


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        _ = y(1) + Polynomial.gen(CURVE2, 'x', 1)
    with pytest.raises(RingMismatchError):
        Polynomial.gen(PLAIN3, 'x', 1)
    with pytest.raises(InputError):
        Polynomial.gen(PLAIN3, 'y', 4)


def test_integer_ring_rejects_fractions():
    with pytest.raises(RingMismatchError):
        Polynomial.from_terms(PLAIN3, {(1, 0, 0): "1/2"})
    half = Polynomial.from_terms(PLAIN3.with_coeff("Q"), {(1, 0, 0): "1/2"})
    assert half * 2 == Polynomial.gen(PLAIN3.with_coeff("Q"), 'y', 1)


def test_prime_field_reduces():
    spec = PLAIN3.with_coeff("Fp:3")
    assert Polynomial.gen(spec, 'y', 1) * 3 == 0


def test_diagonal_swap_moves_both_families():
    x1, c2 = Polynomial.gen(CURVE2, 'x', 1), Polynomial.gen(CURVE2, 'c', 2)
    x2, c1 = Polynomial.gen(CURVE2, 'x', 2), Polynomial.gen(CURVE2, 'c', 1)
    assert (x1 * c2).swap(1) == x2 * c1


def test_elementary_symmetric():
    assert elementary_symmetric(PLAIN3, 2, 'y') == y(1) * y(2) + y(1) * y(3) + y(2) * y(3)
    assert is_invariant(elementary_symmetric(PLAIN3, 2, 'y'), Composition.of(3))


def test_invariant_basis_is_orbit_sums():
    basis = invariant_basis(RingSpec(flavor='plain', n=2), Composition.of(2), 2)
    assert [p for _, p in basis] == [Polynomial.gen(RingSpec(flavor='plain', n=2), 'y', 1)
                                     + Polynomial.gen(RingSpec(flavor='plain', n=2), 'y', 2)]


# ============================================================================
# Demazure operators
# ============================================================================

def test_demazure_small_values():
    assert demazure(y(1), 1) == 1
    assert demazure(y(1) ** 2, 1) == y(1) + y(2)
    assert demazure(y(1) * y(2), 1).is_zero()
    assert demazure(y(3), 1).is_zero()


def test_delta_demazure():
    x1 = Polynomial.gen(CURVE2, 'x', 1)
    assert delta_demazure(x1, 1) == Polynomial.gen(CURVE2, 'c', 1) + Polynomial.gen(CURVE2, 'c', 2)


def test_demazure_rejects_c_family():
    with pytest.raises(RingMismatchError):
        demazure(Polynomial.gen(CURVE2, 'c', 1), 1, 'c')


def test_block_demazure_matches_shuffle_sum():
    spec = RingSpec(flavor='plain', n=3)
    p = Polynomial.gen(spec, 'y', 1) ** 2
    assert demazure_w0ab(p, 1, 2).with_coeff("Q") == shuffle_sum_oracle(p, 1, 2)
    q = Polynomial.gen(spec, 'y', 1) * Polynomial.gen(spec, 'y', 2)
    assert demazure_w0ab(q, 2, 1).with_coeff("Q") == shuffle_sum_oracle(q, 2, 1)


@settings(max_examples=40, deadline=None)
@given(plain_polys)
def test_demazure_squares_to_zero(p):
    assert demazure(demazure(p, 1), 1).is_zero()
    assert demazure(demazure(p, 2), 2).is_zero()


@settings(max_examples=40, deadline=None)
@given(plain_polys)
def test_demazure_braid(p):
    assert demazure_word(p, [1, 2, 1]) == demazure_word(p, [2, 1, 2])


@settings(max_examples=40, deadline=None)
@given(plain_polys, plain_polys)
def test_demazure_leibniz(f, g):
    assert demazure(f * g, 1) == demazure(f, 1) * g + f.swap(1) * demazure(g, 1)


# ============================================================================
# Permutations and cosets
# ============================================================================

def test_words_and_permutations():
    assert from_word(3, [1, 2]) == (2, 3, 1)
    assert len(reduced_word(w0(3))) == 3
    assert is_reduced(reduced_word(w0(4)), 4)
    w, word = w0ab(1, 2)
    assert w == (3, 1, 2)
    assert len(word) == 2 == length(w)


def test_coset_counts():
    assert coset_reps(Composition.of(2), Composition.of(1, 1)) == [(1, 2), (2, 1)]
    assert len(coset_reps(Composition.of(3), Composition.of(1, 1, 1))) == 6
    assert len(double_coset_reps(Composition.of(1, 1), Composition.of(1, 1))) == 2
    assert len(double_coset_reps(Composition.of(2), Composition.of(1, 1))) == 1
    with pytest.raises(InputError):
        coset_reps(Composition.of(2), Composition.of(1, 2))


def test_compositions_are_listed_in_order():
    assert [c.parts for c in compositions(3)] == [(1, 1, 1), (1, 2), (2, 1), (3,)]


@settings(max_examples=30, deadline=None)
@given(st.permutations([1, 2, 3, 4]))
def test_reduced_word_round_trip(w):
    word = reduced_word(tuple(w))
    assert len(word) == length(tuple(w))
    assert from_word(4, word) == tuple(w)
