import math

import pytest
import sympy
from hypothesis import given, strategies as st

from tiltcat.charring import (
    GradedCharacter,
    NoFiltration,
    TruncationSpec,
    char_dual,
    char_mul,
    combine,
    filtration_multiplicities,
    projective_character,
    simple_character,
    simple_decompose,
    u_plus_character,
)

INF = math.inf


def _series_oracle(dim_g, n):
    # prod_{k>=1} (1 - q^k)^(-dim g), expanded with sympy
    x = sympy.symbols("x")
    expr = sympy.Integer(1)
    for k in range(1, n + 1):
        expr *= (1 - x ** k) ** (-dim_g)
    ser = sympy.series(expr, x, 0, n + 1).removeO()
    return [int(ser.coeff(x, k)) for k in range(n + 1)]


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_u_plus_slice_dimensions(label, request):
    rs = request.getfixturevalue(label.lower())
    n = 3
    ch = u_plus_character(rs, n)
    dims = [sum(ch.slice(k).values()) for k in range(n + 1)]
    assert dims == _series_oracle(rs.dim, n)


def test_u_plus_a1_values(a1):
    ch = u_plus_character(a1, 3)
    assert [sum(ch.slice(k).values()) for k in range(4)] == [1, 3, 9, 22]


def test_truncation_spec():
    g = TruncationSpec(0, 2)
    assert 1 in g and 3 not in g
    assert g.reflected() == TruncationSpec(-2, 0)
    assert TruncationSpec(-INF, 0).reflected() == TruncationSpec(0, INF)
    with pytest.raises(ValueError):
        TruncationSpec(2, 1)
    with pytest.raises(ValueError):
        TruncationSpec(-INF, INF).grades()


def test_projective_decomposition(a1):
    dec = simple_decompose(a1, projective_character(a1, (2,), 0, 1))
    assert dec == {((2,), 0): 1, ((4,), 1): 1, ((2,), 1): 1, ((0,), 1): 1}


terms = st.dictionaries(
    st.tuples(st.tuples(st.integers(-4, 4)), st.integers(-2, 2)), st.integers(-3, 3), max_size=8)


@given(terms)
def test_record_roundtrip(t):
    ch = GradedCharacter(t, (-2, 2))
    assert GradedCharacter.from_record(ch.to_record()) == ch


@given(terms)
def test_dual_is_involution(t):
    ch = GradedCharacter(t, (-2, 2))
    assert char_dual(char_dual(ch)) == ch


@given(terms, terms)
def test_product_is_commutative(s, t):
    x, y = GradedCharacter(s, (-2, 2)), GradedCharacter(t, (-2, 2))
    assert char_mul(x, y, (-4, 4)) == char_mul(y, x, (-4, 4))


def test_simple_decompose_rejects_virtual(a1):
    with pytest.raises(ValueError):
        simple_decompose(a1, GradedCharacter({((0,), 0): -1}))


@given(st.dictionaries(st.tuples(st.sampled_from([(0,), (1,), (2,), (3,)]), st.integers(0, 2)),
                       st.integers(0, 3), max_size=6))
def test_filtration_elimination_inverts_combine(a1_mults):
    from tiltcat.rootdata import build_root_system
    rs = build_root_system("A1")
    gamma = TruncationSpec(0, 2)
    # simple modules form a unitriangular family for either orientation
    fam = lambda mu, s: simple_character(rs, mu, s, (s, s))
    mults = {k: m for k, m in a1_mults.items() if m}
    x = combine(fam, mults, (0, 2))
    for family in ("Delta", "Nabla"):
        assert filtration_multiplicities(rs, x, family, gamma, fam) == dict(
            sorted(mults.items(), key=lambda it: (rs.dominant_key(it[0][0]), it[0][1])))


def test_filtration_rejects_negative(a1):
    gamma = TruncationSpec(0, 1)
    fam = lambda mu, s: simple_character(a1, mu, s, (s, s))
    with pytest.raises(NoFiltration):
        filtration_multiplicities(a1, GradedCharacter({((2,), 0): 1, ((0,), 0): 1}, (0, 1)).scaled(-1),
                                  "Delta", gamma, fam)
