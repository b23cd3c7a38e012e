"""
Test Thick Calculus
Compiled thick generators acting on Poll_n through the thin KLR representation
"""

import pytest

from algebra.phi import quiver_merge
from algebra.poly import Polynomial
from algebra.thick import (
    compile_crossing,
    compile_merge,
    noncuspidal_sequences,
    thick_apply,
    thick_checks,
    thick_generator,
    thick_word_apply,
)
from models.report import CheckStatus
from models.ring import Composition, RingSpec
from models.words import SchurGenerator, SchurWord
from runtime.errors import InputError, InvarianceError, SlotMismatchError


QUIVER2 = RingSpec(flavor='quiver', n=2)


def g(name: str, i: int) -> Polynomial:
    return Polynomial.gen(QUIVER2, name, i)


# ============================================================================
# Compilation
# ============================================================================

def test_compiled_merge_shape():
    compiled = compile_merge((1, 1), 1)
    assert compiled.source.expand() == (0, 1, 0, 1)
    assert compiled.target.expand() == (0, 0, 1, 1)
    assert compiled.word.m == 4
    assert compiled.word.generators[0].kind == 'idem'


def test_crossing_swaps_block_sizes():
    compiled = compile_crossing((1, 2), 1)
    assert compiled.target.block_sizes() == (2, 2, 1, 1)


def test_bad_generators():
    with pytest.raises(InputError):
        thick_generator('twist', (1, 1), 1)
    with pytest.raises(InputError):
        compile_merge((2,), 1)


# ============================================================================
# Evaluation
# ============================================================================

def test_merge_values():
    merge = compile_merge((1, 1), 1)
    assert thick_apply(merge, Polynomial.one(QUIVER2)) == 2
    assert thick_apply(merge, g('u', 1)) == g('v', 1) + g('v', 2)
    assert thick_apply(merge, g('v', 1) * g('u', 2)) == quiver_merge(g('v', 1) * g('u', 2), Composition.of(1, 1), 1)


def test_split_is_inclusion():
    split = thick_generator('split', (2,), 1, 1)
    q = g('u', 1) + g('u', 2)
    assert thick_apply(split, q) == q
    with pytest.raises(InvarianceError):
        thick_apply(split, g('u', 1))


def test_trace_starts_at_source_sequence():
    trace: list = []
    thick_apply(compile_merge((1, 1), 1), Polynomial.one(QUIVER2), trace)
    assert trace[0] == (0, 1, 0, 1)
    assert all(len(c) == 4 for c in trace)
    assert noncuspidal_sequences([(0, 1), (1, 0), (1, 0)]) == [(1, 0)]


def test_word_with_decoration():
    word = SchurWord(n=2, source=(1, 1), generators=[
        SchurGenerator(kind='poly', lam=(1, 1), poly=g('u', 1)),
        SchurGenerator(kind='merge', lam=(1, 1)),
    ])
    assert thick_word_apply(word, Polynomial.one(QUIVER2)) == g('v', 1) + g('v', 2)


def test_word_slot_mismatch():
    word = SchurWord(n=2, source=(1, 1), generators=[SchurGenerator(kind='split', lam=(2,), size=1)])
    with pytest.raises(SlotMismatchError):
        thick_word_apply(word, Polynomial.one(QUIVER2))


# ============================================================================
# Checks
# ============================================================================

def test_thick_checks_pass():
    records = thick_checks(2, 2)
    assert [r.id for r in records] == ["thick_merge_formula[(1,1)]", "thick_split_inclusion[(1,1)]"]
    assert all(r.status == CheckStatus.PASS for r in records)
