"""
Test Affinized Symmetric and Zigzag Algebras
tau_i on P_n(F) and on the curve ring, word evaluation and graded dimensions
"""

import pytest

from algebra.frobenius import PnFElement, delta_ij
from algebra.poly import Polynomial
from algebra.wreath import (
    crossing_identity_checks,
    expected_wreath_dimensions,
    plain_spec,
    tau_agrees_with_zigzag,
    tau_apply,
    tau_curve,
    wreath_graded_dimension,
    wreath_relation_checks,
    wreath_word_apply,
    zigzag_relation_checks,
    zigzag_word_apply,
)
from models.frobenius import p1_cohomology, trivial_frobenius
from models.report import CheckStatus
from models.ring import RingSpec
from models.words import WreathGenerator, WreathWord
from runtime.errors import InputError, RingMismatchError


CURVE2 = RingSpec(flavor='curve', n=2)


def gen(name: str, i: int) -> Polynomial:
    return Polynomial.gen(CURVE2, name, i)


def all_pass(records) -> bool:
    return bool(records) and all(r.status == CheckStatus.PASS for r in records)


# ============================================================================
# Zigzag operators
# ============================================================================

def test_zigzag_tau_values():
    assert tau_curve(gen('x', 1), 1) == gen('x', 2) - gen('c', 1) - gen('c', 2)
    assert tau_curve(gen('c', 1), 1) == gen('c', 2)
    assert tau_curve(Polynomial.one(CURVE2), 1) == 1


def test_zigzag_needs_curve_ring():
    with pytest.raises(RingMismatchError):
        tau_curve(Polynomial.gen(RingSpec(flavor='plain', n=2), 'y', 1), 1)


def test_zigzag_word():
    word = WreathWord(n=2, generators=[WreathGenerator(kind='f', index=1, label='c'),
                                       WreathGenerator(kind='tau', index=1)])
    assert zigzag_word_apply(word, Polynomial.one(CURVE2)) == gen('c', 2)
    bad = WreathWord(n=2, generators=[WreathGenerator(kind='f', index=1, label='z')])
    with pytest.raises(InputError):
        zigzag_word_apply(bad, Polynomial.one(CURVE2))


def test_zigzag_relations_hold():
    assert all_pass(zigzag_relation_checks(3, 2))
    assert all_pass(crossing_identity_checks(2, 4))


# ============================================================================
# P_n(F)
# ============================================================================

def test_wreath_word_on_unit():
    F = p1_cohomology()
    spec = plain_spec(2)
    word = WreathWord(n=2, generators=[WreathGenerator(kind='x', index=1), WreathGenerator(kind='tau', index=1)])
    out = wreath_word_apply(word, PnFElement.one(F, spec))
    assert out == PnFElement.x(F, spec, 2) - delta_ij(F, spec, 1, 2)


def test_wreath_word_range():
    F = p1_cohomology()
    word = WreathWord(n=2, generators=[WreathGenerator(kind='tau', index=2)])
    with pytest.raises(InputError):
        wreath_word_apply(word, PnFElement.one(F, plain_spec(2)))
    with pytest.raises(InputError):
        tau_apply(PnFElement.one(F, plain_spec(2)), 2)


def test_tau_matches_zigzag_under_curve_identification():
    F = p1_cohomology()
    for p in (gen('x', 1), gen('x', 1) * gen('c', 2), gen('x', 2) ** 2 + gen('c', 1)):
        assert tau_agrees_with_zigzag(F, p, 1)


@pytest.mark.parametrize("F", [trivial_frobenius(), p1_cohomology()])
def test_wreath_relations_hold(F):
    assert all_pass(wreath_relation_checks(F, 2, 2))


def test_graded_dimension_needs_a_larger_window():
    rank, words, window = wreath_graded_dimension(trivial_frobenius(), 2, 0, 6)
    assert (rank, words, window) == (2, 2, 2)
    assert expected_wreath_dimensions(trivial_frobenius(), 2, 2) == {0: 2, 2: 4}
