"""
Algebra Package
Exact polynomial rings, the curve Schur, wreath and KLR operators, and the comparison maps
"""

from .linalg import (
    DenseMatrix,
    rank,
    rank_over,
    sparse_rank,
    hermite_normal_form,
    hnf_rows,
    smith_normal_form,
    elementary_divisors,
    lattice_membership,
    left_kernel,
)

from .poly import (
    Polynomial,
    act_permutation,
    is_invariant,
    invariant_basis,
    elementary_symmetric,
    monomial_symmetric,
)

from .combinatorics import (
    DoubleCoset,
    from_word,
    reduced_word,
    w0ab,
    coset_reps,
    double_coset_reps,
)

from .demazure import (
    demazure,
    delta_demazure,
    demazure_word,
    demazure_w0ab,
    shuffle_sum_oracle,
)

from .frobenius import (
    PnFElement,
    validate_frobenius,
    coproduct_unit,
    delta_ij,
)

from .schur import (
    curve_spec,
    split_apply,
    merge_apply,
    crossing_apply,
    word_apply,
    psi_element,
    psi_basis,
    graded_matrix,
    shuffle_curve,
)

from .wreath import (
    tau_apply,
    tau_curve,
    wreath_word_apply,
    zigzag_word_apply,
)

from .klr import (
    PolAlphaElement,
    klr_word_apply,
    divided_idempotent_apply,
    thin_basis,
)

from .thick import (
    thick_generator,
    thick_apply,
    thick_word_apply,
)

from .phi import (
    phi_apply,
    phi_hat,
    ev,
    shuffle_klr,
    im_phi_basis,
    phi_kernel,
    cuspidal_spanning_set,
)

from .chern import kunneth_chern

from .lattices import (
    im_phi_lattice,
    tautological_lattice,
    lattice_contains,
    tilde_schur_checks,
    conjecture_probe,
)

__all__ = [
    # Exact linear algebra
    'DenseMatrix',
    'rank',
    'rank_over',
    'sparse_rank',
    'hermite_normal_form',
    'hnf_rows',
    'smith_normal_form',
    'elementary_divisors',
    'lattice_membership',
    'left_kernel',

    # Polynomials and permutations
    'Polynomial',
    'act_permutation',
    'is_invariant',
    'invariant_basis',
    'elementary_symmetric',
    'monomial_symmetric',
    'DoubleCoset',
    'from_word',
    'reduced_word',
    'w0ab',
    'coset_reps',
    'double_coset_reps',

    # Demazure operators
    'demazure',
    'delta_demazure',
    'demazure_word',
    'demazure_w0ab',
    'shuffle_sum_oracle',

    # Frobenius algebras and P_n(F)
    'PnFElement',
    'validate_frobenius',
    'coproduct_unit',
    'delta_ij',

    # Curve Schur algebra
    'curve_spec',
    'split_apply',
    'merge_apply',
    'crossing_apply',
    'word_apply',
    'psi_element',
    'psi_basis',
    'graded_matrix',
    'shuffle_curve',

    # Wreath and zigzag
    'tau_apply',
    'tau_curve',
    'wreath_word_apply',
    'zigzag_word_apply',

    # KLR and thick calculus
    'PolAlphaElement',
    'klr_word_apply',
    'divided_idempotent_apply',
    'thin_basis',
    'thick_generator',
    'thick_apply',
    'thick_word_apply',

    # Comparison maps and lattices
    'phi_apply',
    'phi_hat',
    'ev',
    'shuffle_klr',
    'im_phi_basis',
    'phi_kernel',
    'cuspidal_spanning_set',
    'kunneth_chern',
    'im_phi_lattice',
    'tautological_lattice',
    'lattice_contains',
    'tilde_schur_checks',
    'conjecture_probe',
]
