"""
Test Kronecker KLR Algebra
Polynomial representation, traces, divided idempotents and the u/v view
"""

import pytest

from algebra.klr import (
    PolAlphaElement,
    color_sequences,
    divided_idempotent_apply,
    divided_relation_checks,
    from_quiver,
    klr_relation_checks,
    klr_word_apply,
    noncuspidal,
    plain_spec,
    psi_apply,
    thin_basis_rank,
    to_quiver,
)
from algebra.poly import Polynomial
from models.report import CheckStatus
from models.ring import RingSpec
from models.words import DimVector, KLRGenerator, KLRWord
from runtime.errors import InputError, SlotMismatchError


SPEC2 = plain_spec(2)


def y(i: int, spec: RingSpec = SPEC2) -> Polynomial:
    return Polynomial.gen(spec, 'y', i)


# ============================================================================
# Colour sequences
# ============================================================================

def test_color_sequences_and_cuspidality():
    assert color_sequences(DimVector(n0=1, n1=1)) == [(0, 1), (1, 0)]
    assert len(color_sequences(DimVector(n0=2, n1=2))) == 6
    assert noncuspidal((1, 0))
    assert not noncuspidal((0, 1, 0, 1))
    assert noncuspidal((0, 1, 1, 0))


# ============================================================================
# Generators
# ============================================================================

def test_crossing_of_equal_colours_is_minus_demazure():
    out = psi_apply(PolAlphaElement.single((0, 0), y(1)), 1)
    assert out.component((0, 0)) == -1


def test_crossing_of_different_colours():
    one = Polynomial.one(SPEC2)
    # (0,1) -> (1,0) carries no factor; the way back multiplies by (y1 - y2)^2
    forward = psi_apply(PolAlphaElement.single((0, 1), one), 1)
    assert forward == PolAlphaElement.single((1, 0), one)
    back = psi_apply(forward, 1)
    assert back == PolAlphaElement.single((0, 1), (y(1) - y(2)) ** 2)


def test_word_trace_records_sequences():
    trace: list = []
    word = KLRWord.of(2, "psi1 y2 psi1")
    out = klr_word_apply(word, PolAlphaElement.single((0, 1), Polynomial.one(SPEC2)), trace)
    assert trace == [(0, 1), (1, 0)]
    assert out.component((0, 1)) == (y(1) - y(2)) ** 2 * y(1)


def test_word_errors():
    element = PolAlphaElement.single((0, 1), Polynomial.one(SPEC2))
    with pytest.raises(SlotMismatchError):
        klr_word_apply(KLRWord.of(3, "psi1"), element)
    with pytest.raises(InputError):
        klr_word_apply(KLRWord.of(2, "psi2"), element)
    with pytest.raises(SlotMismatchError):
        klr_word_apply(KLRWord(m=2, generators=[KLRGenerator(kind='idem', colors=(0,))]), element)
    with pytest.raises(ValueError):
        KLRWord.of(2, "z1")


def test_idempotent_selects_component():
    element = PolAlphaElement.single((0, 1), Polynomial.one(SPEC2))
    word = KLRWord(m=2, generators=[KLRGenerator(kind='idem', colors=(1, 0))])
    assert klr_word_apply(word, element).is_zero()


# ============================================================================
# Divided idempotents
# ============================================================================

def test_divided_idempotent_projects_to_symmetric():
    assert divided_idempotent_apply(Polynomial.one(SPEC2)) == 1
    assert divided_idempotent_apply(y(1) + y(2)) == y(1) + y(2)
    assert divided_idempotent_apply(y(1)).is_zero()


def test_divided_relations_hold():
    records = divided_relation_checks(3, 4)
    assert all(r.status == CheckStatus.PASS for r in records)


# ============================================================================
# u/v view
# ============================================================================

def test_quiver_view():
    p = y(1) + y(2) * 2
    q = to_quiver(p, (0, 1))
    quiver = RingSpec(flavor='quiver', n=1)
    assert q == Polynomial.gen(quiver, 'u', 1) + Polynomial.gen(quiver, 'v', 1) * 2
    assert from_quiver(q, (0, 1)) == p
    assert from_quiver(q, (1, 0)) == y(2) + y(1) * 2
    with pytest.raises(SlotMismatchError):
        to_quiver(p, (0, 0))


# ============================================================================
# Relations and ranks
# ============================================================================

@pytest.mark.parametrize("alpha", [DimVector(n0=1, n1=1), DimVector(n0=2, n1=1)])
def test_klr_relations_hold(alpha):
    records = klr_relation_checks(alpha, 2)
    assert records
    assert all(r.status == CheckStatus.PASS for r in records), [r.id for r in records if r.status != CheckStatus.PASS]


def test_thin_basis_rank_is_full():
    rank, count, _ = thin_basis_rank(DimVector(n0=1, n1=1), (0, 1), 2, 6)
    assert rank == count > 0
