import pytest

from core.errors import DimensionError, HypothesisError, RingMismatchError
from core.linalg import Matrix
from core.linear_code import (
    code_from_generators, code_sum, contains_code, cyclic_code, cyclic_shift, dual, equals, full_space,
    hull, intersect, is_lcd, is_lcd_free_test, iter_codewords, member, min_distance, params,
    scale_code, zero_code,
)
from core.oracle import brute_dual, brute_min_distance, brute_span
from core.ring import ring_new


def test_z30_duals(z30, z30_example):
    C1, C2, _ = z30_example
    assert C1.cardinality == 4
    assert C2.cardinality == 9
    assert dual(C1) == code_from_generators(z30, 2, [(2, 0), (0, 2)])
    assert dual(C2) == code_from_generators(z30, 2, [(3, 0), (0, 3)])
    assert C1.cardinality * dual(C1).cardinality == 30 ** 2


def test_canonical_form_ignores_order_and_redundancy(z30):
    a = code_from_generators(z30, 2, [(15, 0), (0, 15)])
    b = code_from_generators(z30, 2, [(0, 15), (15, 15), (15, 0), (0, 0)])
    assert a == b
    assert equals(a, b)
    assert not equals(a, full_space(z30, 2))


def test_length_must_be_positive(z30):
    with pytest.raises(DimensionError):
        code_from_generators(z30, 0, [])


def test_membership(z30_example):
    C1, _, _ = z30_example
    assert member(C1, (15, 15))
    assert member(C1, (0, 0))
    assert not member(C1, (10, 0))
    with pytest.raises(DimensionError):
        member(C1, (15,))


def test_inclusion(z30, z30_example):
    C1, C2, _ = z30_example
    assert contains_code(full_space(z30, 2), C1)
    assert contains_code(C1, zero_code(z30, 2))
    assert not contains_code(C1, C2)


def test_sum_and_intersection(z30, z30_example):
    C1, C2, _ = z30_example
    assert code_sum(C1, C2) == code_from_generators(z30, 2, [(5, 0), (0, 5)])
    assert intersect(C1, C2).is_zero


def test_incompatible_codes():
    C = full_space(ring_new(4), 2)
    with pytest.raises(DimensionError):
        code_sum(C, full_space(ring_new(4), 3))
    with pytest.raises(RingMismatchError):
        code_sum(C, full_space(ring_new(8), 2))
    with pytest.raises(DimensionError):
        equals(C, full_space(ring_new(4), 3))


def test_free_and_non_free_codes():
    ring = ring_new(4)
    free = code_from_generators(ring, 3, [(1, 0, 2), (0, 1, 3)])
    assert free.is_free and free.rank == 2 and free.cardinality == 16
    torsion = code_from_generators(ring, 2, [(2, 0)])
    assert not torsion.is_free
    assert torsion.rank is None
    assert torsion.cardinality == 2


def test_dual_matches_enumeration():
    C = code_from_generators(ring_new(6), 3, [(2, 3, 0), (0, 2, 4)])
    assert set(iter_codewords(dual(C))) == brute_dual(C.generator_matrix)


def test_iter_codewords_unique():
    C = code_from_generators(ring_new(12), 2, [(2, 4)])
    words = list(iter_codewords(C))
    assert len(words) == len(set(words)) == C.cardinality == 6
    assert set(words) == brute_span(C.generator_matrix)


def test_hull_and_lcd(z30_example):
    C1, C2, _ = z30_example
    assert is_lcd(C1) and is_lcd(C2)
    self_orthogonal = code_from_generators(ring_new(4), 2, [(2, 2)])
    assert hull(self_orthogonal) == self_orthogonal
    assert not is_lcd(self_orthogonal)
    assert not is_lcd(code_from_generators(ring_new(2), 2, [(1, 1)]))


def test_lcd_determinant_test(z4_lcd_code):
    assert is_lcd_free_test(z4_lcd_code.generator_matrix)
    with pytest.raises(HypothesisError):
        is_lcd_free_test(Matrix.from_rows(ring_new(4), [[2, 0]]))


def test_scale_code():
    ring = ring_new(4)
    assert scale_code(ring.elem(2), full_space(ring, 1)).cardinality == 2
    with pytest.raises(RingMismatchError):
        scale_code(ring_new(8).elem(2), full_space(ring, 1))


def test_min_distance_by_enumeration():
    ring = ring_new(2)
    repetition = code_from_generators(ring, 3, [(1, 1, 1)])
    even = code_from_generators(ring, 3, [(1, 1, 0), (0, 1, 1)])
    assert min_distance(repetition).lo == 3
    assert min_distance(even).lo == 2
    assert min_distance(even).exact


def test_min_distance_zero_code():
    assert min_distance(zero_code(ring_new(4), 3)) is None
    assert params(zero_code(ring_new(4), 3)).distance_text == "absent"


def test_min_distance_weight_search_agrees_with_enumeration():
    C = code_from_generators(ring_new(9), 4, [(1, 3, 0, 2), (0, 3, 3, 6)])
    searched = min_distance(C, enum_cap=1, weight_cap=4)
    assert searched.exact
    assert searched.lo == brute_min_distance(C.generator_matrix)
    assert member(C, searched.witness)


def test_min_distance_interval_when_capped():
    C = cyclic_code(ring_new(25), 12, [1, 1])
    d = min_distance(C, enum_cap=1, weight_cap=1)
    assert not d.exact
    assert (d.lo, d.hi) == (2, 12)
    assert str(d) == "d in [2, 12] (weight search capped at 1)"


def test_min_distance_rejects_bad_caps():
    with pytest.raises(HypothesisError):
        min_distance(full_space(ring_new(2), 2), enum_cap=0)
    with pytest.raises(HypothesisError):
        min_distance(full_space(ring_new(2), 2), weight_cap=0)


def test_params_text(z30_example):
    C1, _, _ = z30_example
    assert str(params(C1)) == "(2, 4, 1)"
    assert str(params(cyclic_code(ring_new(25), 12, [1, 1]), weight_cap=2)) == "(12, 25^11, 2)"


def test_cyclic_code():
    ring = ring_new(25)
    C = cyclic_code(ring, 12, [1, 1])
    assert C.rank == 11
    assert all(member(C, cyclic_shift(row)) for row in C.rows)
    f2 = ring_new(2)
    assert cyclic_code(f2, 3, [1, 1, 1]) == code_from_generators(f2, 3, [(1, 1, 1)])


def test_cyclic_code_rejects_bad_polynomials():
    f2 = ring_new(2)
    with pytest.raises(HypothesisError):
        cyclic_code(f2, 3, [1, 0, 1])
    with pytest.raises(HypothesisError):
        cyclic_code(ring_new(4), 3, [1, 2])
    with pytest.raises(HypothesisError):
        cyclic_code(f2, 3, [1, 0, 0, 1])


def test_cyclic_shift():
    assert cyclic_shift((1, 2, 3)) == (3, 1, 2)
