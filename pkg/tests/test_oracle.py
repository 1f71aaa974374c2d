import pytest

from core.errors import DimensionError, OracleCapExceeded
from core.linalg import Matrix
from core.oracle import (
    all_vectors, brute_dual, brute_hull, brute_kernel, brute_left_solve, brute_min_distance,
    brute_mpc, brute_quotient, brute_span, brute_torsion,
)
from core.ring import ring_new


def test_all_vectors_lexicographic():
    assert list(all_vectors(2, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_span_and_dual():
    G = Matrix.from_rows(ring_new(4), [[2, 0]])
    assert brute_span(G) == {(0, 0), (2, 0)}
    assert brute_dual(G) == {(a, b) for a in (0, 2) for b in range(4)}
    assert brute_hull(G) == {(0, 0), (2, 0)}


def test_min_distance():
    f2 = ring_new(2)
    assert brute_min_distance(Matrix.from_rows(f2, [[1, 1, 1]])) == 3
    assert brute_min_distance(Matrix.zeros(f2, 0, 3)) is None


def test_kernel():
    M = Matrix.from_rows(ring_new(6), [[1, 1]])
    assert brute_kernel(M) == {(a, (-a) % 6) for a in range(6)}


def test_left_solve_smallest():
    M = Matrix.from_rows(ring_new(4), [[2, 0], [0, 1]])
    assert brute_left_solve(M, (2, 3)) == (1, 3)
    with pytest.raises(DimensionError):
        brute_left_solve(M, (1,))


def test_quotient_and_torsion():
    G = Matrix.from_rows(ring_new(4), [[2, 0]])
    assert brute_quotient(G, 1) == {(a, b) for a in range(4) for b in (0, 2)}
    assert brute_torsion(G, 1) == {(0, 0), (1, 0)}
    assert brute_torsion(G, 0) == {(0, 0)}


def test_mpc_enumeration():
    f2 = ring_new(2)
    U = Matrix.from_rows(f2, [[1]])
    V = Matrix.zeros(f2, 0, 1)
    words = brute_mpc([U, V], Matrix.from_rows(f2, [[1, 1], [0, 1]]))
    assert words == {(0, 0), (1, 1)}


def test_cap_exceeded():
    G = Matrix.identity(ring_new(10), 4)
    with pytest.raises(OracleCapExceeded):
        brute_dual(G, cap=1000)
