"""Johnson graph codes: construction, duality, decoding."""

import random
from math import comb

import pytest

from graphcodes.combinat import ball_size, complement, graph_params, shell_index
from graphcodes.field import field_make
from graphcodes.jgc import (
    aligned_dot,
    aligned_dual_rows,
    certify_infosets,
    construct,
    dual,
    erasure_decode,
    from_json,
    signed_dual,
    signed_pairing,
    sparse_parities,
    syndrome_of,
    to_json,
    unit_codeword,
)
from graphcodes.matrix import dot, mat_vec, rank
from graphcodes.rs import rs_jgc

F2 = field_make(2)

# the running 5-node example: a non-MDS [5,2] base code
EXAMPLE_BASE = [[1, 0, 1, 1, 0], [0, 1, 0, 1, 1]]


def test_dimension_is_ball_size():
    for (n, v, k, t) in [(5, 2, 2, 1), (6, 3, 2, 1), (7, 4, 3, 2), (7, 4, 3, 1)]:
        code = rs_jgc(n, v, k, t, 11)
        assert code.dim == ball_size(n, v, k, min(v, k) - t)
        assert code.length == comb(n, v)


def test_generator_rows_are_independent():
    code = rs_jgc(6, 3, 2, 1, 7)
    assert rank(code.F, code.generator) == code.dim


def test_example_certification():
    code = construct(F2, EXAMPLE_BASE, 3, 2)
    report = certify_infosets(code)
    assert report["fail"] == []
    assert report["skipped"] == [(0, 2), (1, 4)]
    assert len(report["pass"]) == comb(5, 2) - 2


def test_mds_base_passes_every_anchor():
    code = rs_jgc(6, 3, 3, 2, 7)
    report = certify_infosets(code)
    assert report["fail"] == [] and report["skipped"] == []
    assert len(report["pass"]) == comb(6, 3)


def test_unit_codeword_support():
    code = rs_jgc(6, 3, 3, 2, 7)
    A0 = (1, 2, 4)
    for L in code.vertices:
        a = len(set(A0) & set(L))
        if a < code.t:
            continue
        weight_bound = comb(2 * a + code.n - code.k - code.v, a)
        word = unit_codeword(code, A0, L)
        assert code.coord(word, L) == 1
        # zero at every layer at most as far from the anchor as L
        for Lp in code.vertices:
            if Lp != L and shell_index(Lp, A0) <= shell_index(L, A0):
                assert code.coord(word, Lp) == 0
        assert sum(1 for x in word if x) <= weight_bound


def test_example_unit_codeword_weights():
    # weights stay within C(2t+n-k-v, t) = C(4,2) = 6
    code = construct(F2, EXAMPLE_BASE, 3, 2)
    A0 = (0, 1)
    for L in code.vertices:
        if len(set(A0) & set(L)) >= code.t:
            w = sum(1 for x in unit_codeword(code, A0, L) if x)
            assert w <= 6


def test_dual_dimensions_and_orthogonality():
    code = rs_jgc(6, 3, 2, 1, 7)
    dcode = dual(code)
    assert code.dim + dcode.dim == comb(6, 3)
    for c in code.generator[:5]:
        for d in dcode.generator[:5]:
            assert aligned_dot(code.F, c, code.vertices, d, dcode.vertices) == 0


def test_signed_pairing_vanishes():
    code = rs_jgc(6, 2, 2, 1, 7)
    scode = signed_dual(code)
    assert scode.v == code.n - code.v
    for c in code.generator[:4]:
        for d in scode.generator[:4]:
            assert signed_pairing(code.F, c, code.vertices,
                                  d, scode.vertices, code.n) == 0


def test_sparse_parity_structure():
    code = rs_jgc(7, 4, 3, 2, 11)
    A = (0, 2, 5)
    structure = sparse_parities(code, A)
    assert len(structure) == code.length - code.dim
    d1, d2, R = graph_params(code.n, code.v, code.k)
    Ac = complement(A, code.n)
    gen_pos = code.vertex_pos
    for (Lp, support), i in zip(structure.rows, structure.block_of_row):
        assert shell_index(Lp, Ac) == i
        weights = sum(1 for _, c in support if c)
        assert weights <= comb(d1 + d2 - 2 * i, R - i)
        # pivot has coefficient one, the rest sit strictly closer to A
        coeffs = dict(support)
        assert coeffs[Lp] == 1
        for L, c in support:
            if L != Lp and c:
                assert shell_index(L, A) < shell_index(Lp, A)
        # each row is a dual codeword
        h = [0] * code.length
        for L, c in support:
            h[gen_pos[L]] = c
        for row in code.generator:
            assert dot(code.F, row, h) == 0


def test_erasure_decode_codeword():
    rng = random.Random(9)
    code = rs_jgc(6, 3, 2, 1, 11)
    F = code.F
    A = (1, 4)
    coeffs = [rng.randrange(11) for _ in range(code.dim)]
    word = mat_vec(F, [list(col) for col in zip(*code.generator)], coeffs)
    known = {L: code.coord(word, L) for L in code.vertices
             if shell_index(L, A) <= code.r}
    assert erasure_decode(code, A, known) == word


def test_erasure_decode_with_syndrome():
    rng = random.Random(10)
    code = rs_jgc(6, 3, 2, 1, 11)
    dcode = dual(code)
    A = (0, 3)
    vec = [rng.randrange(11) for _ in range(code.length)]
    syn = syndrome_of(code, vec, dcode)
    known = {L: code.coord(vec, L) for L in code.vertices
             if shell_index(L, A) <= code.r}
    assert erasure_decode(code, A, known, syndrome=syn, dual_code=dcode) == vec


def test_erasure_decode_rejects_inconsistent_known():
    code = rs_jgc(6, 3, 2, 1, 11)
    with pytest.raises(ValueError):
        erasure_decode(code, (0, 1), {})


def test_aligned_dual_rows_shape():
    code = rs_jgc(5, 2, 2, 1, 7)
    H = aligned_dual_rows(code)
    assert len(H) == code.length - code.dim
    assert all(len(row) == code.length for row in H)


def test_json_roundtrip():
    code = rs_jgc(6, 3, 2, 1, 7)
    back = from_json(to_json(code))
    assert back.generator == code.generator
    assert back.vertices == code.vertices
    with pytest.raises(ValueError):
        from_json('{"family": "other"}')


def test_bad_threshold_rejected():
    with pytest.raises(ValueError):
        construct(F2, EXAMPLE_BASE, 3, 0)
    with pytest.raises(ValueError):
        construct(F2, EXAMPLE_BASE, 3, 3)
