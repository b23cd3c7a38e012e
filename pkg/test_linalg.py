"""
Test Exact Linear Algebra
Rank over Q and F_p, Hermite and Smith normal forms, lattice membership and kernels
"""

import pytest
from hypothesis import given, settings, strategies as st

from algebra.linalg import (
    DenseMatrix,
    elementary_divisors,
    hermite_normal_form,
    hnf_coordinates,
    hnf_rows,
    lattice_membership,
    left_kernel,
    matrix_from_sparse_rows,
    rank,
    rank_over,
    sparse_rank,
)
from runtime.errors import InputError, RingMismatchError


small_ints = st.integers(min_value=-6, max_value=6)
matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=1, max_size=4)
)


def test_rank_depends_on_the_field():
    m = DenseMatrix([[1, 1], [1, 3]], "Q")
    assert rank(m) == 2
    assert rank_over(DenseMatrix([[1, 1], [1, 3]]), "Fp:2") == 1
    assert rank_over(DenseMatrix([[1, 1], [1, 3]]), "Fp:3") == 2


def test_rank_refuses_integers():
    with pytest.raises(RingMismatchError):
        rank(DenseMatrix([[1]]))
    with pytest.raises(RingMismatchError):
        sparse_rank([{0: 1}], "Z")


def test_ragged_rows_rejected():
    with pytest.raises(InputError):
        DenseMatrix([[1, 2], [3]])


def test_hnf_is_canonical():
    h, u = hermite_normal_form(DenseMatrix([[2, 4], [1, 3]]))
    assert h.rows == [[1, 1], [0, 2]]
    assert u @ DenseMatrix([[2, 4], [1, 3]]) == h


def test_elementary_divisors():
    assert elementary_divisors(DenseMatrix([[2, 4], [1, 3]])) == [1, 2]
    assert elementary_divisors(DenseMatrix([[2, 0], [0, 3]])) == [1, 6]
    assert elementary_divisors(DenseMatrix([[0, 0], [0, 0]])) == []


def test_lattice_membership():
    basis = DenseMatrix([[2, 0], [0, 3]])
    assert lattice_membership(basis, [4, 9]) == [2, 3]
    assert lattice_membership(basis, [1, 0]) is None
    with pytest.raises(InputError):
        lattice_membership(basis, [1, 2, 3])


def test_hnf_coordinates():
    rows = hnf_rows(DenseMatrix([[2, 4], [1, 3]]))
    assert hnf_coordinates(rows, [2, 4]) == [2, 1]
    assert hnf_coordinates(rows, [0, 1]) is None


def test_left_kernel():
    m = DenseMatrix([[1, 2], [2, 4]])
    kernel = left_kernel(m)
    assert len(kernel) == 1
    v = DenseMatrix([kernel[0]])
    assert v @ m == DenseMatrix([[0, 0]])


def test_sparse_rows_share_columns():
    matrix, keys = matrix_from_sparse_rows([{'b': 1}, {'a': 2, 'b': 1}])
    assert keys == ['a', 'b']
    assert matrix.rows == [[0, 1], [2, 1]]
    assert sparse_rank([{'a': 1, 'b': 1}, {'a': 2, 'b': 2}], "Q") == 1
    assert sparse_rank([{'a': 1}, {'b': 2}], "Fp:2") == 1


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_hnf_transform_property(rows):
    m = DenseMatrix(rows)
    h, u = hermite_normal_form(m)
    assert u @ m == h
    # the HNF row lattice has the same rank as m over Q
    assert len(hnf_rows(m)) == rank_over(m, "Q")


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_kernel_vectors_annihilate(rows):
    m = DenseMatrix(rows)
    kernel = left_kernel(m)
    assert len(kernel) == m.nrows - rank_over(m, "Q")
    for v in kernel:
        assert DenseMatrix([v]) @ m == DenseMatrix.zeros(1, m.ncols)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_row_combinations_are_members(rows):
    m = DenseMatrix(rows)
    target = [sum(row[j] * (k + 1) for k, row in enumerate(rows)) for j in range(m.ncols)]
    coeffs = lattice_membership(m, target)
    assert coeffs is not None
    assert [sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(m.ncols)] == target
