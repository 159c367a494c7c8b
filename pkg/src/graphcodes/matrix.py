"""Exact dense linear algebra over GF(q).

Matrices are lists of rows; each row is a list of field elements
(integers in [0, q)).  Every function takes the FieldSpec first.
"""

from __future__ import annotations

from math import comb
from typing import List, Optional, Sequence, Tuple

from graphcodes.combinat import johnson_vertices, sign_of
from graphcodes.field import FieldSpec

Mat = List[List[int]]


def zeros(rows: int, cols: int) -> Mat:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Mat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_mat(M: Mat) -> Mat:
    return [list(row) for row in M]


def transpose(M: Mat) -> Mat:
    return [list(col) for col in zip(*M)]


def mat_mul(F: FieldSpec, A: Mat, B: Mat) -> Mat:
    if len(A[0]) != len(B):
        raise ValueError(f"shape mismatch: {len(A)}x{len(A[0])} times {len(B)}x{len(B[0])}")
    Bt = transpose(B)
    out = zeros(len(A), len(Bt))
    for i, arow in enumerate(A):
        for j, bcol in enumerate(Bt):
            s = 0
            for a, b in zip(arow, bcol):
                if a and b:
                    s = F.add(s, F.mul(a, b))
            out[i][j] = s
    return out


def mat_vec(F: FieldSpec, A: Mat, x: Sequence[int]) -> List[int]:
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, x):
            if a and b:
                s = F.add(s, F.mul(a, b))
        out.append(s)
    return out


def dot(F: FieldSpec, x: Sequence[int], y: Sequence[int]) -> int:
    s = 0
    for a, b in zip(x, y):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


def scale_row(F: FieldSpec, row: Sequence[int], c: int) -> List[int]:
    return [F.mul(c, x) for x in row]


def det(F: FieldSpec, M: Mat) -> int:
    """Determinant by Gaussian elimination (exact over the field)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant requires a square matrix")
    A = copy_mat(M)
    d = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            d = F.neg(d)
        d = F.mul(d, A[col][col])
        inv = F.inv(A[col][col])
        for r in range(col + 1, n):
            if A[r][col] == 0:
                continue
            factor = F.mul(A[r][col], inv)
            A[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(A[r], A[col])]
    return d


def rref(F: FieldSpec, M: Mat) -> Tuple[Mat, List[int]]:
    """Reduced row echelon form and pivot column indices."""
    A = copy_mat(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                factor = A[i][c]
                A[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(F: FieldSpec, M: Mat) -> int:
    if not M:
        return 0
    _, pivots = rref(F, M)
    return len(pivots)


def nullspace(F: FieldSpec, M: Mat) -> Mat:
    """Basis of the right kernel, one row per basis vector."""
    if not M:
        return []
    R, pivots = rref(F, M)
    cols = len(M[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * cols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = F.neg(R[r][f])
        basis.append(vec)
    return basis


def solve(F: FieldSpec, A: Mat, b: Sequence[int]) -> Optional[List[int]]:
    """One solution of A x = b, or None if inconsistent."""
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    cols = len(A[0])
    if cols in pivots:
        return None
    x = [0] * cols
    for r, c in enumerate(pivots):
        x[c] = R[r][cols]
    return x


def submatrix(M: Mat, rows: Sequence[int], cols: Sequence[int]) -> Mat:
    return [[M[i][j] for j in cols] for i in rows]


def take_columns(M: Mat, cols: Sequence[int]) -> Mat:
    return [[row[j] for j in cols] for row in M]


def pi(F: FieldSpec, M: Mat, vertices: Sequence[Sequence[int]]) -> List[int]:
    """Plucker coordinates: det of the v x v column minor at each vertex L."""
    v = len(M)
    n = len(M[0])
    if v > n:
        raise ValueError(f"pi needs a v x n matrix with v <= n, got {v} x {n}")
    return [det(F, [[row[j] for j in L] for row in M]) for L in vertices]


def pi_signed(F: FieldSpec, M: Mat, vertices: Sequence[Sequence[int]]) -> List[int]:
    """sign(L) * pi(M)_L: det of M extended by the unit rows I_{L^c}."""
    coords = pi(F, M, vertices)
    return [x if sign_of(L) == 1 else F.neg(x) for x, L in zip(coords, vertices)]


def tau(F: FieldSpec, M: Mat, tuples: Sequence[Sequence[int]]) -> List[int]:
    """Tensor coordinates: product of M[i][L_i] over rows i, per m-tuple L."""
    out = []
    for L in tuples:
        prod = 1
        for i, c in enumerate(L):
            prod = F.mul(prod, M[i][c])
            if prod == 0:
                break
        out.append(prod)
    return out


def compound_row(F: FieldSpec, g: Mat, I: Sequence[int],
                 vertices: Sequence[Sequence[int]]) -> List[int]:
    """Row I of the compound matrix: pi of the rows of g indexed by I."""
    return pi(F, [g[i] for i in I], vertices)


def compound(F: FieldSpec, g: Mat, v: int, order: str = "lex",
             k: int = None) -> Tuple[Mat, List[Tuple[int, ...]]]:
    """Full compound matrix of all v x v minors of the n x n matrix g.

    Returns (matrix, vertex list); entry [I][L] = det(g restricted to
    rows I, columns L).  Materialized only for n <= 10 (C(10,5) = 252).
    """
    n = len(g)
    if any(len(row) != n for row in g):
        raise ValueError("compound requires a square matrix")
    if n > 10:
        raise ValueError("full compound matrix materialized only for n <= 10")
    vertices = johnson_vertices(n, v, order=order, k=k)
    mat = [compound_row(F, g, I, vertices) for I in vertices]
    return mat, vertices


def compound_size(n: int, v: int) -> int:
    return comb(n, v)


def write_matrix(path: str, F: FieldSpec, M: Mat) -> None:
    """File format: first line "rows cols q", then row-major integers."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    with open(path, "w") as fh:
        fh.write(f"{rows} {cols} {F.q}\n")
        for row in M:
            fh.write(" ".join(str(x) for x in row) + "\n")


def read_matrix(path: str) -> Tuple[FieldSpec, Mat]:
    with open(path) as fh:
        tokens = fh.read().split()
    rows, cols, q = int(tokens[0]), int(tokens[1]), int(tokens[2])
    data = [int(t) for t in tokens[3:]]
    if len(data) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(data)}")
    F = FieldSpec(q)
    M = [data[i * cols:(i + 1) * cols] for i in range(rows)]
    for row in M:
        for x in row:
            F.check(x)
    return F, M
