import itertools
import math

from hypothesis import given, strategies as st

from tiltcat.orders import (
    PsiFace,
    adjoint_face,
    covering_leq,
    covers,
    lex_leq,
    partial_order_violations,
    psi_distance,
    psi_face_check,
    psi_leq,
)
from tiltcat.rootdata import build_root_system

INF = math.inf
A1 = build_root_system("A1")
A2 = build_root_system("A2")
ALPHA = (2,)


def _covering_oracle(rs, p, q):
    # explicit BFS over root coordinates: k steps, each adding a root or nothing
    k = q[1] - p[1]
    if k < 0:
        return False
    target = tuple(rs.to_root_coords(tuple(a - b for a, b in zip(q[0], p[0]))))
    if any(int(x) != x for x in target):
        return False
    steps = [tuple(rs.to_root_coords(w)) for w in rs.root_weights] + [tuple(0 for _ in target)]
    reach = {tuple(0 for _ in target)}
    for _ in range(k):
        reach = {tuple(a + b for a, b in zip(x, s)) for x in reach for s in steps}
    return tuple(int(x) for x in target) in {tuple(int(c) for c in x) for x in reach}


def test_lex_examples():
    assert lex_leq(A1, ((0,), 5), ((2,), 0))
    assert lex_leq(A1, ((3,), 1), ((3,), 2))
    assert not lex_leq(A1, ((1,), 0), ((0,), 9))


def test_covering_examples():
    assert covering_leq(A1, ((2,), 0), ((2,), 1))
    assert covering_leq(A1, ((0,), 0), ((2,), 1))
    assert not covering_leq(A1, ((2,), 0), ((0,), 0))
    assert covers(A1, ((0,), 0), ((2,), 1))
    assert not covers(A1, ((0,), 0), ((4,), 1))


pts1 = st.tuples(st.tuples(st.integers(0, 6)), st.integers(-2, 3))
pts2 = st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-1, 2))


@given(pts1, pts1)
def test_covering_matches_oracle_a1(p, q):
    # closed form for A1: even difference of at most twice the grade gap
    k = q[1] - p[1]
    d = q[0][0] - p[0][0]
    want = k >= 0 and d % 2 == 0 and abs(d) <= 2 * k
    assert covering_leq(A1, p, q) == want == _covering_oracle(A1, p, q)


@given(pts2, pts2)
def test_covering_matches_oracle_a2(p, q):
    assert covering_leq(A2, p, q) == _covering_oracle(A2, p, q)


@given(pts1, pts1)
def test_covering_respects_grades(p, q):
    if covering_leq(A1, p, q):
        assert q[1] >= p[1]


def test_face_examples():
    assert psi_face_check(adjoint_face(A1, [ALPHA]))
    assert psi_face_check(adjoint_face(A1, []))
    full = PsiFace.from_weights([ALPHA, (0,), (-2,)], [ALPHA, (0,), (-2,)])
    v = psi_face_check(full)
    assert not v.holds and v.witness is not None and v.radius >= 2
    assert not psi_face_check(adjoint_face(A1, [ALPHA, (-2,)]))


def test_psi_distance_examples():
    f = adjoint_face(A1, [ALPHA])
    assert psi_distance((3,), (3,), f) == 0
    assert psi_distance((0,), (2,), f) == 1
    assert psi_distance((0,), (4,), f) == 2
    assert psi_distance((2,), (0,), f) == INF
    assert psi_leq(((0,), 0), ((2,), 1), f)
    assert not psi_leq(((0,), 0), ((2,), 2), f)
    assert psi_leq(((4,), 1), ((4,), 1), f)


def test_a2_simple_root_face():
    a1 = tuple(A2.root_weights[A2.roots.index((1, 0))])
    f = adjoint_face(A2, [a1])
    assert psi_face_check(f)
    assert psi_distance((0, 0), tuple(2 * x for x in a1), f) == 2


SAMPLE = [((m,), g) for m in range(5) for g in range(-2, 3)]


def test_partial_order_laws():
    for leq in (lambda p, q: lex_leq(A1, p, q), lambda p, q: covering_leq(A1, p, q)):
        assert partial_order_violations(SAMPLE, leq) == []
    for psi in ([ALPHA], [(-2,)]):
        f = adjoint_face(A1, psi)
        assert partial_order_violations(SAMPLE, lambda p, q: psi_leq(p, q, f)) == []


def test_triangle_and_refinement():
    for psi in ([ALPHA], [(-2,)]):
        f = adjoint_face(A1, psi)
        ws = [(m,) for m in range(7)]
        for a, b, c in itertools.product(ws, repeat=3):
            d1, d2 = psi_distance(a, b, f), psi_distance(b, c, f)
            if d1 < INF and d2 < INF:
                assert psi_distance(a, c, f) <= d1 + d2
        for p, q in itertools.product(SAMPLE, repeat=2):
            if psi_leq(p, q, f):
                assert covering_leq(A1, p, q)
