from hypothesis import given, strategies as st

from tiltcat.charring import u_plus_character
from tiltcat.pbw import TruncatedEnvelope
from tiltcat.rootdata import build_root_system


def test_monomial_counts_match_character(a1, a2):
    for rs in (a1, a2):
        env = TruncatedEnvelope(rs, 3)
        ch = u_plus_character(rs, 3)
        for d in range(4):
            assert len(env.monomials(d)) == sum(ch.slice(d).values())


def _poly_mul(env, p, word):
    out = {}
    for m, c in p.items():
        for mm, cc in env.mul_word(word + m).items():
            out[mm] = out.get(mm, 0) + c * cc
    return {m: c for m, c in out.items() if c}


@given(st.lists(st.tuples(st.integers(1, 2), st.integers(0, 7)), min_size=1, max_size=4),
       st.lists(st.tuples(st.integers(1, 2), st.integers(0, 7)), min_size=1, max_size=3))
def test_associativity(u, v):
    env = TruncatedEnvelope(build_root_system("A2"), 6)
    u, v = tuple(u), tuple(v)
    # (u)(v) computed as normal form of the concatenation and as a product of normal forms
    whole = env.mul_word(u + v)
    right = env.mul_word(v)
    staged = {}
    for m, c in right.items():
        for mm, cc in env.mul_word(u + m).items():
            staged[mm] = staged.get(mm, 0) + c * cc
    staged = {m: c for m, c in staged.items() if c}
    assert whole == staged


@given(st.tuples(st.integers(1, 2), st.integers(0, 2)), st.tuples(st.integers(1, 2), st.integers(0, 2)))
def test_commutator_is_bracket(x, y):
    env = TruncatedEnvelope(build_root_system("A1"), 4)
    xy = env.mul_word((x, y))
    yx = env.mul_word((y, x))
    diff = {m: xy.get(m, 0) - yx.get(m, 0) for m in set(xy) | set(yx)}
    diff = {m: c for m, c in diff.items() if c}
    want = {((z,)): c for z, c in env.lie_bracket(x, y).items()}
    assert diff == want
