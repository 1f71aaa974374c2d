import pytest

from core.errors import DimensionError, HypothesisError, RingMismatchError
from core.linalg import Matrix
from core.linear_code import code_from_generators, dual, full_space, hull, is_lcd, iter_codewords, zero_code
from core.matrix_product import (
    MatrixProductSpec, dual_push_holds, lcd_conditions, identity_condition, identity_reduce, mpc_build,
    mpc_distance_bounds, mpc_dual, mpc_hull, mpc_identity_code, mpc_identity_holds, orth_hull_bound,
    plotkin_matrix, turyn_matrix,
)
from core.oracle import brute_mpc
from core.reference_codes import turyn_codes, z25_cyclic_codes, z25_matrix
from core.ring import ring_new


def test_spec_validation(z30_example):
    C1, C2, A = z30_example
    with pytest.raises(DimensionError):
        MatrixProductSpec((C1,), A)
    with pytest.raises(DimensionError):
        MatrixProductSpec((C1, full_space(C1.ring, 3)), A)
    with pytest.raises(RingMismatchError):
        MatrixProductSpec((C1, C2), Matrix.identity(ring_new(6), 2))
    with pytest.raises(DimensionError):
        MatrixProductSpec((C1, C2), Matrix.from_rows(C1.ring, [[1], [1]]))


def test_build_matches_enumeration(z30_example):
    C1, C2, A = z30_example
    code = mpc_build(MatrixProductSpec((C1, C2), A))
    assert code.length == 4
    assert set(iter_codewords(code)) == brute_mpc([C1.generator_matrix, C2.generator_matrix], A)


def test_example_identity(z30_example):
    C1, C2, A = z30_example
    code = mpc_build(MatrixProductSpec((C1, C2), A))
    assert code == mpc_build(MatrixProductSpec((C2, C1), Matrix.identity(A.ring, 2)))
    assert code.cardinality == 36


def test_plotkin_construction():
    f2 = ring_new(2)
    U = code_from_generators(f2, 2, [(1, 1)])
    V = full_space(f2, 2)
    code = mpc_build(MatrixProductSpec((U, V), plotkin_matrix(f2)))
    assert code.cardinality == 8
    assert (1, 1, 1, 1) in set(iter_codewords(code))


def test_dual_identity(z30_example):
    C1, C2, A = z30_example
    spec = MatrixProductSpec((C1, C2), A)
    assert mpc_dual(spec) == dual(mpc_build(spec))


def test_dual_identity_needs_invertible_matrix(z30_example):
    C1, C2, _ = z30_example
    singular = Matrix.from_rows(C1.ring, [[2, 0], [0, 1]])
    with pytest.raises(HypothesisError):
        mpc_dual(MatrixProductSpec((C1, C2), singular))


def test_dual_push_with_diagonal_aat(z30_example):
    C1, C2, A = z30_example
    assert dual_push_holds(MatrixProductSpec((C1, C2), A))


def test_identity_conditions():
    ring = ring_new(4)
    small = code_from_generators(ring, 2, [(2, 0)])
    big = full_space(ring, 2)
    upper = Matrix.from_rows(ring, [[1, 3], [0, 1]])
    assert identity_condition(MatrixProductSpec((small, big), upper)) == 1
    assert identity_condition(MatrixProductSpec((big, small), upper.transpose())) == 2
    other = code_from_generators(ring, 2, [(0, 1)])
    diagonal = Matrix.from_rows(ring, [[1, 0], [0, 3]])
    assert identity_condition(MatrixProductSpec((small, other), diagonal)) == 3
    swap = Matrix.from_rows(ring, [[0, 1], [1, 0]])
    assert identity_condition(MatrixProductSpec((small, small), swap)) == 4
    assert identity_condition(MatrixProductSpec((small, big), swap)) is None

    spec = MatrixProductSpec((small, big), upper)
    assert identity_reduce(spec) == mpc_identity_code(spec)
    assert mpc_identity_holds(spec)
    assert identity_reduce(MatrixProductSpec((small, big), swap)) is None


def test_hull_provenance(z30_example):
    C1, C2, A = z30_example
    identity = mpc_hull(MatrixProductSpec((C1, C2), Matrix.identity(A.ring, 2)))
    assert identity.provenance == 'case2'
    pushed = mpc_hull(MatrixProductSpec((C1, C2), A))
    assert pushed.provenance == 'case1'
    assert pushed.code == hull(mpc_build(MatrixProductSpec((C1, C2), A)))


def test_hull_direct_fallback():
    ring = ring_new(4)
    C1 = code_from_generators(ring, 1, [(1,)])
    C2 = code_from_generators(ring, 1, [(2,)])
    A = Matrix.from_rows(ring, [[1, 1], [1, 2]])
    spec = MatrixProductSpec((C1, C2), A)
    result = mpc_hull(spec)
    assert result.code == hull(mpc_build(spec))


def test_lcd_conditions_example1(z30_example):
    C1, C2, A = z30_example
    report = lcd_conditions(MatrixProductSpec((C1, C2), A))
    assert report.aat_diag
    assert report.frr_dual_push
    assert report.inputs_lcd and report.mpc_lcd
    assert report.verdict == "MPC is LCD iff every input code is LCD"
    labels = [label for _, label, _ in report.conditions]
    assert labels[2] == 'condition 3 (AAᵗ diagonal-units)'


def test_lcd_conditions_non_lcd_input():
    ring = ring_new(2)
    C = code_from_generators(ring, 2, [(1, 1)])
    report = lcd_conditions(MatrixProductSpec((C, C), plotkin_matrix(ring)))
    assert report.equal_codes_nonsingular
    assert not report.inputs_lcd
    assert not report.mpc_lcd


def test_lcd_conditions_example2():
    codes = z25_cyclic_codes()
    report = lcd_conditions(MatrixProductSpec((codes['x+1'], codes['x+1']), z25_matrix()))
    assert report.aat_adiag_palindrome
    assert report.equal_codes_nonsingular
    assert report.mpc_lcd


def test_orthogonal_hull_bound_z4():
    ring = ring_new(4)
    A = Matrix.from_rows(ring, [[1, 2], [2, 1]])
    C1 = code_from_generators(ring, 2, [(1, 1)])
    C2 = code_from_generators(ring, 2, [(2, 0)])
    spec = MatrixProductSpec((C1, C2), A)
    assert orth_hull_bound(spec, 1, C1, C2)


def test_orthogonal_hull_bound_turyn():
    C1, C2, A = turyn_codes()
    spec = MatrixProductSpec((C1, C1, C2), A)
    assert orth_hull_bound(spec, 2, C1, C2)
    report = lcd_conditions(spec)
    assert report.s1_orthogonal and report.s1 == 2
    assert report.mpc_lcd


def test_orthogonal_hull_bound_hypotheses():
    C1, C2, A = turyn_codes()
    with pytest.raises(HypothesisError):
        orth_hull_bound(MatrixProductSpec((C1, C2, C2), A), 2, C1, C2)
    with pytest.raises(HypothesisError):
        orth_hull_bound(MatrixProductSpec((C1, C1, C2), A), 1, C1, C2)


def test_distance_bounds_plotkin():
    f2 = ring_new(2)
    U = full_space(f2, 3)
    V = code_from_generators(f2, 3, [(1, 1, 1)])
    bounds = mpc_distance_bounds(MatrixProductSpec((U, V), plotkin_matrix(f2)))
    assert bounds.lower == 2
    assert bounds.dual_lower == 4
    assert bounds.exact


def test_distance_bounds_not_nested():
    f2 = ring_new(2)
    U = code_from_generators(f2, 3, [(1, 1, 0), (0, 1, 1)])
    V = code_from_generators(f2, 3, [(1, 1, 1)])
    bounds = mpc_distance_bounds(MatrixProductSpec((U, V), plotkin_matrix(f2)))
    assert bounds.lower == 3
    assert not bounds.exact


def test_distance_bounds_ignore_zero_codes():
    f2 = ring_new(2)
    U = full_space(f2, 2)
    bounds = mpc_distance_bounds(MatrixProductSpec((U, zero_code(f2, 2)), plotkin_matrix(f2)))
    assert bounds.lower == 2


def test_distance_bounds_hypotheses():
    with pytest.raises(HypothesisError):
        C = full_space(ring_new(4), 1)
        mpc_distance_bounds(MatrixProductSpec((C, C), Matrix.identity(ring_new(4), 2)))
    f2 = ring_new(2)
    C = full_space(f2, 1)
    with pytest.raises(HypothesisError):
        mpc_distance_bounds(MatrixProductSpec((C, C, C), turyn_matrix(f2)))


def test_turyn_codes_are_lcd():
    C1, C2, A = turyn_codes()
    assert is_lcd(C1) and is_lcd(C2)
    assert is_lcd(mpc_build(MatrixProductSpec((C1, C1, C2), A)))
