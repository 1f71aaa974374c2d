import pytest

from core.errors import DimensionError, HypothesisError, RingMismatchError
from core.linalg import (
    Matrix, aat_classify, det, howell_form, inverse, is_frr, is_nonsingular, is_nsc,
    partition_blocks, reduce_matrix_mod_gamma, right_inverse, right_kernel, solve_left,
)
from core.matrix_product import plotkin_matrix, turyn_matrix
from core.oracle import brute_kernel, brute_left_solve, brute_span
from core.ring import ring_new


def _vec_mat(x, M):
    m = M.ring.modulus
    return tuple(sum(a * M.entries[i][j] for i, a in enumerate(x)) % m for j in range(M.cols))


def test_matrix_canonicalizes_entries():
    M = Matrix.from_rows(ring_new(6), [[7, -1], [12, 3]])
    assert M.entries == ((1, 5), (0, 3))


def test_matrix_shape_errors():
    ring = ring_new(4)
    with pytest.raises(DimensionError):
        Matrix(ring, 1, 2, ((1, 2, 3),))
    with pytest.raises(DimensionError):
        Matrix.from_rows(ring, [])
    with pytest.raises(DimensionError):
        Matrix.identity(ring, 2) @ Matrix.identity(ring, 3)
    with pytest.raises(RingMismatchError):
        Matrix.identity(ring, 2) @ Matrix.identity(ring_new(8), 2)


def test_triangular_predicates():
    ring = ring_new(5)
    upper = Matrix.from_rows(ring, [[1, 2], [0, 3]])
    assert upper.is_upper_triangular() and not upper.is_lower_triangular()
    assert upper.transpose().is_lower_triangular()
    assert Matrix.identity(ring, 3).is_diagonal()


def test_howell_form_same_span_same_form():
    ring = ring_new(12)
    A = Matrix.from_rows(ring, [[2, 4], [3, 6]])
    B = Matrix.from_rows(ring, [[1, 2]])
    assert howell_form(A) == howell_form(B)


def test_howell_form_idempotent_and_span_preserving():
    ring = ring_new(8)
    M = Matrix.from_rows(ring, [[2, 4, 6], [4, 1, 0], [6, 5, 2]])
    H = howell_form(M)
    assert howell_form(H.matrix) == H
    assert brute_span(H.matrix) == brute_span(M)
    assert all(8 % d == 0 for d in H.pivots)
    assert list(H.pivot_cols) == sorted(set(H.pivot_cols))


def test_howell_property_annihilator_row():
    # (2, 1) 的 2 倍是 (0, 2)，必须出现在规范形里
    H = howell_form(Matrix.from_rows(ring_new(4), [[2, 1]]))
    assert H.contains((0, 2))
    assert H.rows == ((2, 1), (0, 2))


def test_right_kernel_matches_enumeration():
    M = Matrix.from_rows(ring_new(6), [[2, 3, 0], [0, 2, 4]])
    K = right_kernel(M)
    assert brute_span(K) == brute_kernel(M)


def test_right_kernel_of_unimodular_is_zero():
    assert right_kernel(Matrix.identity(ring_new(9), 3)).rows == 0


def test_solve_left_solution():
    M = Matrix.from_rows(ring_new(6), [[1, 2], [0, 3]])
    b = _vec_mat((2, 1), M)
    x = solve_left(M, b)
    assert x is not None
    assert _vec_mat(x, M) == b


def test_solve_left_no_solution():
    M = Matrix.from_rows(ring_new(4), [[2, 0]])
    assert solve_left(M, (1, 0)) is None
    assert brute_left_solve(M, (1, 0)) is None


def test_solve_left_length_mismatch():
    with pytest.raises(DimensionError):
        solve_left(Matrix.identity(ring_new(4), 2), (1, 2, 3))


def test_determinant():
    assert det(Matrix.from_rows(ring_new(30), [[1, 2], [3, 4]])).value == 28
    assert det(Matrix.identity(ring_new(7), 0)).value == 1
    with pytest.raises(DimensionError):
        det(Matrix.from_rows(ring_new(7), [[1, 2]]))


def test_full_row_rank_and_right_inverse():
    ring = ring_new(4)
    assert not is_frr(Matrix.from_rows(ring, [[2, 0]]))
    assert right_inverse(Matrix.from_rows(ring, [[2, 0]])) is None
    M = Matrix.from_rows(ring, [[1, 2, 3], [0, 1, 2]])
    assert is_frr(M)
    B = right_inverse(M)
    assert M @ B == Matrix.identity(ring, 2)


def test_inverse_of_orthogonal_matrix():
    A = Matrix.from_rows(ring_new(30), [[6, 5], [5, 6]])
    assert inverse(A) == A.transpose()
    assert inverse(A) @ A == Matrix.identity(ring_new(30), 2)


def test_inverse_of_singular_matrix():
    with pytest.raises(HypothesisError):
        inverse(Matrix.from_rows(ring_new(4), [[2, 0], [0, 1]]))


def test_nonsingular_over_non_chain_ring():
    ring = ring_new(6)
    assert is_nonsingular(Matrix.from_rows(ring, [[1, 2], [4, 1]]))
    assert not is_nonsingular(Matrix.from_rows(ring, [[2, 0], [0, 1]]))


def test_nsc():
    f2 = ring_new(2)
    assert is_nsc(plotkin_matrix(f2))
    assert not is_nsc(turyn_matrix(f2))
    assert is_nsc(Matrix.from_rows(ring_new(25), [[1, 7], [7, 1]]))
    with pytest.raises(DimensionError):
        is_nsc(Matrix.from_rows(f2, [[1], [1]]))


def test_aat_classification():
    assert str(aat_classify(Matrix.from_rows(ring_new(25), [[1, 7], [7, 1]]))) == 'antidiagonal_units(14, 14)'
    shape = aat_classify(Matrix.from_rows(ring_new(30), [[6, 5], [5, 6]]))
    assert shape.kind == 'diagonal_units'
    assert shape.values == (1, 1)
    assert aat_classify(Matrix.from_rows(ring_new(2), [[1, 1], [1, 1]])).kind == 'other'


def test_partition_blocks():
    f2 = ring_new(2)
    blocks = partition_blocks(turyn_matrix(f2), 2)
    assert blocks is not None
    assert blocks[0].rows == 2 and blocks[1].rows == 1
    assert partition_blocks(plotkin_matrix(f2), 1) is None
    with pytest.raises(DimensionError):
        partition_blocks(plotkin_matrix(f2), 2)


def test_reduce_matrix_mod_gamma():
    R = reduce_matrix_mod_gamma(Matrix.from_rows(ring_new(25), [[1, 7], [7, 1]]))
    assert R.ring == ring_new(5)
    assert R.entries == ((1, 2), (2, 1))
