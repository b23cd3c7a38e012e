"""
Test Curve Schur Algebra
Splits, merges, crossings, operator words and the shuffle product on P_n
"""

import pytest

from algebra.poly import Polynomial
from algebra.schur import (
    associativity_checks,
    crossing_apply,
    curve_spec,
    merge_apply,
    merge_demazure_form,
    psi_basis,
    rank_two_checks,
    shuffle_curve,
    split_apply,
    split_chain,
    windowed_rank,
    word_apply,
)
from models.report import CheckStatus
from models.ring import Composition
from models.words import SchurGenerator, SchurWord
from runtime.errors import InputError, InvarianceError, SlotMismatchError


SPEC2 = curve_spec(2)
THIN, FULL = Composition.of(1, 1), Composition.of(2)


def gen(name: str, i: int, spec=SPEC2) -> Polynomial:
    return Polynomial.gen(spec, name, i)


# ============================================================================
# Generators
# ============================================================================

def test_thin_merge_small_values():
    x1, x2, c1, c2 = gen('x', 1), gen('x', 2), gen('c', 1), gen('c', 2)
    assert merge_apply(Polynomial.one(SPEC2), THIN, FULL) == 2
    assert merge_apply(c1, THIN, FULL) == c1 + c2
    assert merge_apply(x1, THIN, FULL) == x1 + x2 - c1 - c2


def test_merge_matches_demazure_form():
    x1, c2 = gen('x', 1), gen('c', 2)
    for p in (x1 ** 3, x1 * c2, x1 * gen('x', 2) + c2):
        assert merge_apply(p, THIN, FULL) == merge_demazure_form(p, 1)


def test_split_is_inclusion():
    p = gen('x', 1) + gen('x', 2)
    assert split_apply(p, FULL, THIN) == p


def test_invariance_is_enforced():
    with pytest.raises(InvarianceError):
        split_apply(gen('x', 1), FULL, THIN)
    with pytest.raises(InvarianceError):
        merge_apply(gen('x', 1), FULL, FULL)
    with pytest.raises(InputError):
        merge_apply(Polynomial.one(SPEC2), FULL, THIN)


def test_crossing_needs_an_adjacent_swap():
    spec = curve_spec(3)
    p = Polynomial.one(spec)
    out = crossing_apply(p, Composition.of(1, 2), Composition.of(2, 1))
    assert out.n == 3
    with pytest.raises(InputError):
        crossing_apply(p, Composition.of(1, 2), Composition.of(1, 1, 1))


# ============================================================================
# Words
# ============================================================================

def test_merge_after_split_is_two():
    word = SchurWord(n=2, source=(2,), generators=[
        SchurGenerator(kind='split', lam=(2,), size=1),
        SchurGenerator(kind='merge', lam=(1, 1)),
    ])
    assert word.target == (2,)
    p = gen('x', 1) + gen('x', 2)
    assert word_apply(word, p) == p * 2


def test_word_slot_mismatch():
    word = SchurWord(n=2, source=(2,), generators=[SchurGenerator(kind='merge', lam=(1, 1))])
    with pytest.raises(SlotMismatchError):
        word_apply(word, Polynomial.one(SPEC2))


def test_psi_words_have_full_rank_in_low_degree():
    mu, lam = Composition.of(1, 1), Composition.of(2)
    words = [w for _, _, w in psi_basis(mu, lam, 0)]
    rank, _ = windowed_rank(words, lam, 0, 6)
    assert rank == len(words) > 0


# ============================================================================
# Shuffle product
# ============================================================================

def test_shuffle_of_units():
    one = Polynomial.one(curve_spec(1))
    assert shuffle_curve(one, one) == 2


def test_shuffle_of_classes():
    c = gen('c', 1, curve_spec(1))
    one = Polynomial.one(curve_spec(1))
    assert shuffle_curve(c, one) == gen('c', 1) + gen('c', 2)


def test_shuffle_rejects_non_symmetric_factor():
    with pytest.raises(InvarianceError):
        shuffle_curve(gen('x', 1), Polynomial.one(curve_spec(1)))


# ============================================================================
# Relation checks
# ============================================================================

def test_associativity_checks_pass():
    records = associativity_checks(3, 2)
    assert records
    assert all(r.status == CheckStatus.PASS for r in records), [r.id for r in records if r.status != CheckStatus.PASS]
    ids = {r.id for r in records}
    assert {"merge_chain_direct[(1,1,1)]", "split_chain_direct[(1,1,1)]"} <= ids


def test_split_chain_is_inclusion():
    p = gen('x', 1) + gen('x', 2)
    assert split_chain(p, (2,), (1, 1)) == p
    with pytest.raises(InvarianceError):
        split_chain(gen('x', 1), (2,), (1, 1))


def test_rank_two_checks_pass():
    records = rank_two_checks(4)
    assert {r.id for r in records} == {"thin_merge_demazure_form", "merge_poly_split", "merge_split_is_two"}
    assert all(r.status == CheckStatus.PASS for r in records)
