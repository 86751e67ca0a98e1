import sympy
from hypothesis import given, strategies as st

from tiltcat.linalg import Echelon, SMat, nullspace, q, rank, solve_combination

small = st.integers(-3, 3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def _sparse_rows(rows):
    return [{j: q(x) for j, x in enumerate(row) if x} for row in rows]


@given(matrices())
def test_nullspace_matches_sympy(rows):
    ncols = len(rows[0])
    ns = nullspace(_sparse_rows(rows), ncols)
    assert len(ns) == ncols - sympy.Matrix(rows).rank()
    for v in ns:
        for row in rows:
            assert sum(row[j] * v.get(j, 0) for j in range(ncols)) == 0


@given(matrices())
def test_echelon_rank_matches_sympy(rows):
    assert rank(_sparse_rows(rows)) == sympy.Matrix(rows).rank()


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_combination(rows, coeffs):
    basis = _sparse_rows(rows)
    target = {}
    for c, v in zip(coeffs, basis):
        for k, x in v.items():
            target[k] = target.get(k, 0) + c * x
    target = {k: q(x) for k, x in target.items() if x}
    sol = solve_combination(basis, target)
    assert sol is not None
    back = {}
    for k, c in sol.items():
        for i, x in basis[k].items():
            back[i] = back.get(i, 0) + c * x
    assert {k: x for k, x in back.items() if x} == target


def test_echelon_payload_tracks_row_operations():
    e = Echelon(track_payload=True)
    e.add({0: q(1), 1: q(1)}, {0: q(1)})
    e.add({1: q(2)}, {1: q(1)})
    r, pl = e.reduce({0: q(3), 1: q(5)}, {})
    assert r == {}
    # 3 (1,1) + 1 (0,2) = (3,5)
    assert pl == {0: q(-3), 1: q(-1)}


@given(matrices(4, 4), matrices(4, 4))
def test_matrix_product_matches_sympy(a, b):
    if len(a[0]) != len(b):
        return
    A, B = SMat.from_rows(a), SMat.from_rows(b)
    got = (A @ B).to_rows()
    want = (sympy.Matrix(a) * sympy.Matrix(b)).tolist()
    assert [[int(x) for x in row] for row in got] == want


def test_transpose_trace_identity():
    m = SMat.from_rows([[1, 2], [3, 4]])
    assert m.transpose().to_rows() == [[1, 3], [2, 4]]
    assert m.trace() == 5
    assert SMat.identity(3).trace() == 3
