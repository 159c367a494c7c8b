"""Dense linear algebra, minor vectors and compound matrices."""

import random

import pytest

from graphcodes.combinat import johnson_vertices
from graphcodes.field import field_make
from graphcodes.matrix import (
    compound,
    compound_size,
    det,
    identity,
    mat_mul,
    mat_vec,
    nullspace,
    pi,
    pi_signed,
    rank,
    read_matrix,
    rref,
    solve,
    submatrix,
    take_columns,
    tau,
    transpose,
    write_matrix,
    zeros,
)

F7 = field_make(7)


def _rand_mat(rng, F, rows, cols):
    return [[rng.randrange(F.q) for _ in range(cols)] for _ in range(rows)]


def test_basic_shapes():
    assert zeros(2, 3) == [[0, 0, 0], [0, 0, 0]]
    assert identity(3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert transpose([[1, 2, 3], [4, 5, 6]]) == [[1, 4], [2, 5], [3, 6]]
    assert submatrix([[1, 2], [3, 4]], [1], [0]) == [[3]]
    assert take_columns([[1, 2, 3]], [2, 0]) == [[3, 1]]


def test_det_oracles():
    assert det(F7, [[1, 2], [3, 4]]) == (4 - 6) % 7
    assert det(F7, [[2]]) == 2
    assert det(F7, identity(4)) == 1
    # singular
    assert det(F7, [[1, 2], [2, 4]]) == 0


def test_det_multiplicative():
    rng = random.Random(3)
    for _ in range(20):
        A = _rand_mat(rng, F7, 3, 3)
        B = _rand_mat(rng, F7, 3, 3)
        assert det(F7, mat_mul(F7, A, B)) == F7.mul(det(F7, A), det(F7, B))


def test_rref_rank_nullspace():
    M = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    R, pivots = rref(F7, M)
    assert pivots == [0, 1]
    assert rank(F7, M) == 2
    N = nullspace(F7, M)
    assert len(N) == 1
    for row in N:
        assert mat_vec(F7, M, row) == [0, 0, 0]


def test_solve_roundtrip():
    rng = random.Random(5)
    for _ in range(10):
        A = _rand_mat(rng, F7, 3, 3)
        if det(F7, A) == 0:
            continue
        x = [rng.randrange(7) for _ in range(3)]
        b = mat_vec(F7, A, x)
        assert solve(F7, A, b) == x
    # inconsistent system
    assert solve(F7, [[1, 0], [1, 0]], [1, 2]) is None


def test_pi_is_minor_vector():
    M = [[1, 0, 2], [0, 1, 3]]
    verts = johnson_vertices(3, 2)
    assert pi(F7, M, verts) == [
        det(F7, [[1, 0], [0, 1]]),
        det(F7, [[1, 2], [0, 3]]),
        det(F7, [[0, 2], [1, 3]]),
    ]


def test_pi_signed_equals_extended_determinant():
    rng = random.Random(11)
    n, v = 5, 3
    verts = johnson_vertices(n, v)
    for _ in range(10):
        M = _rand_mat(rng, F7, v, n)
        signed = pi_signed(F7, M, verts)
        for L, val in zip(verts, signed):
            ext = [list(r) for r in M] + [
                [1 if c == j else 0 for c in range(n)]
                for j in range(n) if j not in L
            ]
            assert val == det(F7, ext)


def test_tau_is_entry_product():
    F2 = field_make(2)
    M = [[1, 0], [1, 1]]
    tuples = [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert tau(F2, M, tuples) == [1, 1, 0, 0]


def test_compound_of_identity():
    C, verts = compound(F7, identity(4), 2)
    assert len(verts) == compound_size(4, 2) == 6
    assert C == identity(6)


def test_compound_multiplicative():
    rng = random.Random(7)
    g = _rand_mat(rng, F7, 4, 4)
    h = _rand_mat(rng, F7, 4, 4)
    Cg, _ = compound(F7, g, 2)
    Ch, _ = compound(F7, h, 2)
    Cgh, _ = compound(F7, mat_mul(F7, g, h), 2)
    assert Cgh == mat_mul(F7, Cg, Ch)


def test_compound_of_upper_triangular_is_upper_triangular():
    g = [[1, 2, 3, 4], [0, 5, 6, 1], [0, 0, 2, 3], [0, 0, 0, 4]]
    C, _ = compound(F7, g, 2, order="lex")
    for i in range(len(C)):
        for j in range(i):
            assert C[i][j] == 0


def test_matrix_file_roundtrip(tmp_path):
    path = str(tmp_path / "m.txt")
    M = [[1, 2, 3], [4, 5, 6]]
    write_matrix(path, F7, M)
    G, back = read_matrix(path)
    assert G.q == 7
    assert back == M


def test_pi_rejects_wide_rows():
    with pytest.raises(ValueError):
        pi(F7, [[1, 2], [3, 4], [5, 6]], [(0, 1)])
