"""
Test phi and the Shuffle Products
Poll_n -> P_n maps, the quiver and curve shuffles, f_k and t_{n,k}
"""

import pytest

from algebra.phi import (
    associativity_checks,
    ev,
    example_checks,
    f_commutativity_checks,
    f_curve,
    homomorphism_checks,
    kernel_checks,
    one_star_f_checks,
    one_star_f_sides,
    phi_apply,
    phi_hat,
    phi_kernel,
    power_sum_difference,
    quiver_spec,
    shuffle_klr,
    t_curve,
    t_product_checks,
)
from algebra.poly import Polynomial
from algebra.schur import curve_spec, shuffle_curve
from models.report import CheckStatus
from models.ring import Composition
from runtime.errors import InputError, InvarianceError, RingMismatchError


Q1, Q2 = quiver_spec(1), quiver_spec(2)
C2 = curve_spec(2)


def all_pass(records) -> bool:
    return bool(records) and all(r.status == CheckStatus.PASS for r in records)


def c(i: int) -> Polynomial:
    return Polynomial.gen(C2, 'c', i)


def x(i: int) -> Polynomial:
    return Polynomial.gen(C2, 'x', i)


# ============================================================================
# phi, phi_hat, ev
# ============================================================================

def test_phi_on_generators():
    u, v = Polynomial.gen(Q1, 'u', 1), Polynomial.gen(Q1, 'v', 1)
    x1, c1 = Polynomial.gen(curve_spec(1), 'x', 1), Polynomial.gen(curve_spec(1), 'c', 1)
    assert phi_apply(u) == x1
    assert phi_apply(v) == x1 + c1
    assert phi_hat(u) == -x1
    assert phi_hat(v) == c1 - x1
    assert ev(u + v) == Polynomial.gen(ev(u).spec, 'y', 1)


def test_phi_input_checks():
    with pytest.raises(InvarianceError):
        phi_apply(Polynomial.gen(Q2, 'u', 1), Composition.of(2))
    with pytest.raises(RingMismatchError):
        phi_apply(x(1))


def test_phi_kernel_in_one_variable():
    assert phi_kernel(Composition.of(1), 2) == []
    kernel = phi_kernel(Composition.of(1), 4)
    assert len(kernel) == 1
    assert phi_apply(kernel[0]).is_zero()
    assert kernel[0] in (power_sum_difference(1), -power_sum_difference(1))


def test_power_sum_difference():
    u1, v1 = Polynomial.gen(Q1, 'u', 1), Polynomial.gen(Q1, 'v', 1)
    assert power_sum_difference(1) == (v1 - u1) ** 2
    known = power_sum_difference(2)
    assert known.degree == 6
    assert phi_apply(known, Composition.of(2)).is_zero()


def test_kernel_checks_in_two_variables():
    records = kernel_checks(2, 6)
    assert all_pass(records), [r.id for r in records if r.status != CheckStatus.PASS]
    ids = {r.id for r in records}
    assert {"power_sum_difference_in_kernel[(2)]", "power_sum_difference_in_kernel[(1,1)]"} <= ids


# ============================================================================
# Shuffle products
# ============================================================================

def test_one_star_one_is_two():
    assert shuffle_klr(Polynomial.one(Q1), Polynomial.one(Q1)) == 2
    one = Polynomial.one(curve_spec(1))
    assert shuffle_curve(one, one) == 2


def test_curve_shuffle_is_not_commutative():
    one, x1 = Polynomial.one(curve_spec(1)), Polynomial.gen(curve_spec(1), 'x', 1)
    assert shuffle_curve(one, x1) != shuffle_curve(x1, one)


def test_phi_hat_is_a_shuffle_homomorphism():
    assert all_pass(homomorphism_checks(3, 2))


def test_shuffles_are_associative():
    assert all_pass(associativity_checks(4))


def test_example_checks():
    records = example_checks()
    assert all_pass(records)
    assert "curve_shuffle_not_commutative" in {r.id for r in records}


# ============================================================================
# f_k and t_{n,k}
# ============================================================================

def test_t_values():
    assert t_curve(1, 1) == Polynomial.gen(curve_spec(1), 'c', 1)
    assert t_curve(2, 1) == c(1) + c(2)
    assert t_curve(2, 2) == c(1) * x(1) + c(2) * x(2) + c(1) * c(2)


def test_t_product_equals_f_shuffle():
    product = t_curve(2, 1) * t_curve(2, 2)
    assert product == c(1) * c(2) * (x(1) + x(2))
    assert product == shuffle_curve(f_curve(1), f_curve(2))
    assert (t_curve(1, 1) * t_curve(1, 1)).is_zero()


def test_f_needs_positive_index():
    with pytest.raises(InputError):
        f_curve(0)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_one_star_f_is_signed_elementary(n, k):
    lhs, rhs = one_star_f_sides(n, k)
    assert lhs == rhs


def test_f_and_t_checks():
    assert all_pass(one_star_f_checks(3))
    assert all_pass(t_product_checks(2))
    assert all_pass(f_commutativity_checks(2))
