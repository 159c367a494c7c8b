"""Property-based checks for the algebra kernels."""

from hypothesis import given, settings
from hypothesis import strategies as st

from graphcodes.field import field_make
from graphcodes.layered import LayeredSpec, encode_layered, extract_data
from graphcodes.matrix import det, mat_mul, mat_vec, rank, rref, solve
from graphcodes.subres import (
    poly_add,
    poly_deg,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_trim,
)

F = field_make(7)

elem = st.integers(min_value=0, max_value=6)


def square(n):
    return st.lists(st.lists(elem, min_size=n, max_size=n),
                    min_size=n, max_size=n)


monic = st.lists(elem, min_size=1, max_size=5).map(lambda c: c + [1])


@settings(max_examples=60, derandomize=True, deadline=None)
@given(square(3), square(3))
def test_det_multiplicative(A, B):
    assert det(F, mat_mul(F, A, B)) == F.mul(det(F, A), det(F, B))


@settings(max_examples=60, derandomize=True, deadline=None)
@given(square(3))
def test_rref_preserves_rank(A):
    R, pivots = rref(F, A)
    assert rank(F, A) == len(pivots) == rank(F, R)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(square(3), st.lists(elem, min_size=3, max_size=3))
def test_solve_solutions_verify(A, b):
    x = solve(F, A, b)
    if x is not None:
        assert mat_vec(F, A, x) == b


@settings(max_examples=60, derandomize=True, deadline=None)
@given(monic, monic)
def test_poly_divmod_invariant(p, q):
    quo, rem = poly_divmod(F, p, q)
    assert poly_deg(rem) < poly_deg(q)
    assert poly_add(F, poly_mul(F, quo, q), rem) == poly_trim(p)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(monic, monic)
def test_poly_gcd_divides_both(p, q):
    g = poly_gcd(F, p, q)
    assert poly_deg(g) >= 0
    for h in (p, q):
        _, rem = poly_divmod(F, h, g)
        assert poly_deg(rem) == -1


@settings(max_examples=30, derandomize=True, deadline=None)
@given(st.lists(elem, min_size=20, max_size=20))
def test_layered_roundtrip(data):
    spec = LayeredSpec(F, 5, 3)
    assert spec.M1 == 20
    nodes = encode_layered(spec, data)
    values = {(L, j): nodes[j][spec.slot[(L, j)]]
              for L in spec.layers for j in L}
    assert extract_data(spec, values) == data
