"""
Test Integral Lattices
Kunneth-Chern classes, Im phi and tautological lattices, reductions mod p and the probe
"""

import pytest

from algebra.chern import chern_monomials, kunneth_chern, tautological_generators
from algebra.lattices import (
    EXPERIMENTAL,
    GENERATION_DEGREE,
    characteristic_two_checks,
    chern_example_checks,
    conjecture_probe,
    cuspidal_checks,
    divisors_coprime_to,
    im_phi_lattice,
    intertwining_checks,
    lattice_checks,
    lattice_contains,
    lattice_summary,
    odd_prime_generation_checks,
    reduction_checks,
    tautological_lattice,
    tilde_schur_checks,
)
from algebra.poly import Polynomial
from algebra.schur import curve_spec
from models.report import CheckStatus
from models.ring import Composition
from runtime.errors import InputError


SYM2 = Composition.of(2)
C2 = curve_spec(2)


def g(name: str, i: int) -> Polynomial:
    return Polynomial.gen(C2, name, i)


def all_pass(records) -> bool:
    return bool(records) and all(r.status == CheckStatus.PASS for r in records)


# ============================================================================
# Kunneth-Chern classes
# ============================================================================

def test_chern_values_for_two_points():
    classes = kunneth_chern(2, 4)
    c1, c2, x1, x2 = g('c', 1), g('c', 2), g('x', 1), g('x', 2)
    assert classes[(0, 0)] == 1
    assert classes[(1, 1)] == 2
    assert classes[(1, 0)] == c1 + c2
    assert classes[(2, 1)] == (c1 + c2) * 3 - x1 - x2
    assert classes[(1, 0)] ** 2 == c1 * c2 * 2


def test_chern_input_validation():
    with pytest.raises(InputError):
        kunneth_chern(0, 4)


def test_tautological_generators_have_positive_degree():
    gens = tautological_generators(2, 4)
    assert (1, 1) not in gens and (0, 0) not in gens
    assert (1, 0) in gens and (2, 1) in gens
    assert list(chern_monomials([(1, 0), (2, 1)], 4)) == [((1, 0), (1, 0)), ((1, 0), (2, 1)), ((2, 1), (2, 1))]


def test_chern_example_checks():
    assert all_pass(chern_example_checks())


# ============================================================================
# Lattices
# ============================================================================

def test_c1c2_is_not_in_im_phi():
    lattice = im_phi_lattice(SYM2, 4)
    c1c2 = g('c', 1) * g('c', 2)
    assert not lattice_contains(lattice, c1c2, SYM2)
    assert lattice_contains(lattice, c1c2 * 2, SYM2)
    assert lattice_contains(lattice, g('x', 1) * g('x', 2) * 2, SYM2)
    # c1c2 has order two modulo the lattice
    assert divisors_coprime_to(lattice, 2) < lattice.rank


def test_tautological_lattice_equals_im_phi():
    for d in (0, 2, 4):
        assert tautological_lattice(2, d).rows == im_phi_lattice(SYM2, d).rows


def test_thin_lattice_is_everything():
    assert im_phi_lattice(Composition.of(1, 1), 2).is_full()


def test_lattice_summary_shape():
    summary = lattice_summary(im_phi_lattice(SYM2, 2), SYM2)
    assert summary['degree'] == 2
    assert summary['composition'] == [2]
    assert len(summary['ambient']) == summary['rank']
    assert set(summary) >= {'rows', 'elementary_divisors', 'full'}


@pytest.mark.parametrize("n", [1, 2])
def test_lattice_checks_pass(n):
    records = lattice_checks(n, 4)
    assert all_pass(records), [r.id for r in records if r.status != CheckStatus.PASS]


# ============================================================================
# Thick against curve, reductions and the probe
# ============================================================================

def test_phi_hat_intertwines_generators():
    assert all_pass(intertwining_checks(2, 2))


def test_reductions_mod_two():
    assert all_pass(reduction_checks(2, 4, 2))
    records = characteristic_two_checks()
    assert all_pass(records)
    assert "square_in_kernel_over_F2" in {r.id for r in records}


def test_conjecture_records_are_evidence_only():
    records = conjecture_probe(2, 2, 2)
    assert len(records) == 4
    assert all(r.status != CheckStatus.FAIL for r in records)
    assert all(EXPERIMENTAL in (r.detail or "") for r in records)


def test_conjecture_ranks_per_decoration_degree():
    for record in conjecture_probe(2, 2, 3):
        if record.status != CheckStatus.PASS:
            continue
        per_degree = record.data['by_degree']
        q_ranks = [entry['q_rank'] for entry in per_degree]
        assert all(entry['fp_rank'] <= entry['q_rank'] for entry in per_degree)
        assert max(q_ranks, default=0) <= record.data['q_rank'] <= sum(q_ranks)
        assert [entry['decoration_degree'] for entry in per_degree] == sorted(entry['decoration_degree'] for entry in per_degree)


# ============================================================================
# Odd primes, the cuspidal spanning set and the reduced thick Schur algebra
# ============================================================================

def test_c1c2_fills_symmetric_slot_for_odd_prime():
    records = odd_prime_generation_checks(GENERATION_DEGREE, 3)
    assert [r.id for r in records] == [f"c1c2_generates[d={d},p=3]" for d in (0, 2, 4, 6, 8)]
    assert all_pass(records)


def test_odd_prime_generation_reaches_degree_eight_at_low_degree():
    records = tilde_schur_checks(2, 4, 3)
    assert all_pass(records), [r.id for r in records if r.status != CheckStatus.PASS]
    assert "c1c2_generates[d=8,p=3]" in {r.id for r in records}


def test_cuspidal_spanning_words_agree_with_curve_images():
    records = cuspidal_checks(2, 4)
    assert len(records) == 4
    assert all_pass(records), [r.id for r in records if r.status != CheckStatus.PASS]
    assert all(r.data['words'] > 0 for r in records)
