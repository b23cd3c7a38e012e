"""
Test Frobenius Algebras
Table validation, the coproduct of the unit and arithmetic in P_n(F)
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from algebra.frobenius import (
    PnFElement,
    coproduct_unit,
    delta_ij,
    pnf_basis,
    pnf_from_curve,
    pnf_poincare_coefficients,
    pnf_to_curve,
    validate_frobenius,
)
from algebra.poly import Polynomial
from models.frobenius import FrobeniusAlgebra, p1_cohomology, trivial_frobenius
from models.ring import RingSpec
from runtime.errors import InputError, RingMismatchError


PLAIN2 = RingSpec(flavor='plain', n=2)


# ============================================================================
# Validation
# ============================================================================

@pytest.mark.parametrize("F", [trivial_frobenius(), p1_cohomology(), p1_cohomology(deformed=True)])
def test_presets_validate(F):
    result = validate_frobenius(F)
    assert result.passed
    assert result.first_failure is None
    assert {c.name for c in result.checks} >= {"unit", "associativity", "pairing_invariant", "pairing_graded"}


def test_degenerate_pairing_is_reported():
    F = FrobeniusAlgebra(name="broken", labels=("1",), degrees=(0,), mult=((0, 0, 0, "1"),), pairing=(("0",),))
    result = validate_frobenius(F)
    assert not result.passed
    assert result.first_failure == "pairing_nondegenerate"


def test_ungraded_pairing_declared_graded_fails():
    F = p1_cohomology(deformed=True).model_copy(update={'graded_pairing': True})
    result = validate_frobenius(F)
    assert result.first_failure == "pairing_graded"


def test_table_shape_is_validated():
    with pytest.raises(ValidationError):
        FrobeniusAlgebra(labels=("1", "c"), degrees=(0, 3), mult=((0, 0, 0, "1"),), pairing=(("0", "1"), ("1", "0")))
    with pytest.raises(ValidationError):
        FrobeniusAlgebra(labels=("1",), degrees=(0,), mult=((0, 0, 2, "1"),), pairing=(("1",),))


# ============================================================================
# Coproduct
# ============================================================================

def test_coproduct_of_unit():
    assert coproduct_unit(trivial_frobenius()) == {(0, 0): Fraction(1)}
    assert coproduct_unit(p1_cohomology()) == {(0, 1): Fraction(1), (1, 0): Fraction(1)}
    # 1 (x) c + c (x) 1 - c (x) c
    assert coproduct_unit(p1_cohomology(deformed=True)) == {
        (0, 1): Fraction(1), (1, 0): Fraction(1), (1, 1): Fraction(-1),
    }


def test_coproduct_needs_a_nonsingular_pairing():
    F = FrobeniusAlgebra(name="broken", labels=("1",), degrees=(0,), mult=((0, 0, 0, "1"),), pairing=(("0",),))
    with pytest.raises(InputError):
        coproduct_unit(F)


def test_delta_absorbs_slot_differences():
    F = p1_cohomology()
    delta = delta_ij(F, PLAIN2, 1, 2)
    c1, c2 = PnFElement.slot(F, PLAIN2, 1, "c"), PnFElement.slot(F, PLAIN2, 2, "c")
    assert ((c1 - c2) * delta).is_zero()
    assert delta == c1 + c2
    with pytest.raises(InputError):
        delta_ij(F, PLAIN2, 1, 1)


# ============================================================================
# P_n(F)
# ============================================================================

def test_pnf_arithmetic():
    F = p1_cohomology()
    c1 = PnFElement.slot(F, PLAIN2, 1, "c")
    x1 = PnFElement.x(F, PLAIN2, 1)
    assert (c1 * c1).is_zero()
    assert (x1 * c1).swap(1) == PnFElement.x(F, PLAIN2, 2) * PnFElement.slot(F, PLAIN2, 2, "c")
    assert (x1 * c1).demazure_x(1) == c1


def test_pnf_requires_plain_x_part():
    with pytest.raises(RingMismatchError):
        PnFElement.one(p1_cohomology(), RingSpec(flavor='curve', n=2))


def test_basis_sizes_match_poincare_series():
    F = p1_cohomology()
    one = RingSpec(flavor='plain', n=1)
    series = pnf_poincare_coefficients(F, 1, 4)
    assert series == {0: 1, 2: 2, 4: 2}
    for degree, count in series.items():
        assert len(pnf_basis(F, one, degree)) == count


def test_curve_bridge():
    curve = RingSpec(flavor='curve', n=2)
    p = Polynomial.gen(curve, 'x', 1) * Polynomial.gen(curve, 'c', 2) + Polynomial.gen(curve, 'c', 1)
    element = pnf_from_curve(p1_cohomology(), p)
    assert pnf_to_curve(element) == p
    with pytest.raises(RingMismatchError):
        pnf_from_curve(trivial_frobenius(), p)
