from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, strategies as st

from tiltcat.rootdata import CartanDatum, UnsupportedType, build_root_system

TYPES = ["A1", "A2", "A3", "C2"]


def test_unsupported_type():
    with pytest.raises(UnsupportedType):
        CartanDatum.of("E8")


@pytest.mark.parametrize("label,npos", [("A1", 1), ("A2", 3), ("A3", 6), ("C2", 4)])
def test_positive_root_counts(label, npos):
    rs = build_root_system(label)
    assert rs.npos == npos
    assert rs.dim == 2 * npos + rs.rank


@pytest.mark.parametrize("label", TYPES)
def test_jacobi_identity(label):
    assert build_root_system(label).jacobi_violations() == []


@pytest.mark.parametrize("label", TYPES)
def test_structure_constants_antisymmetric_and_bounded(label):
    rs = build_root_system(label)
    for (i, j), n in rs.structure.items():
        assert rs.structure[(j, i)] == -n
        assert 1 <= abs(n) <= 3


def test_c2_convention(c2):
    # alpha_1 short: its fundamental coordinates are the first column
    assert c2.simple_root(0) == (2, -1)
    assert c2.simple_root(1) == (-2, 2)
    assert c2.inner(c2.simple_root(0), c2.simple_root(0)) * 2 == c2.inner(c2.simple_root(1), c2.simple_root(1))


def _weyl_dim_oracle(rs, lam):
    # product over positive roots of (lam + rho, a) / (rho, a), via sympy rationals
    num = sympy.Integer(1)
    lr = tuple(a + b for a, b in zip(lam, rs.rho))
    for a in rs.root_weights[: rs.npos]:
        num *= sympy.Rational(rs.inner(lr, a)) / sympy.Rational(rs.inner(rs.rho, a))
    return int(num)


@pytest.mark.parametrize("label", TYPES)
def test_weyl_character_dimensions_height_four(label):
    rs = build_root_system(label)
    ws = [w for w in rs.enumerate_dominant(200) if rs.height(w) <= 4]
    for lam in ws:
        ch = rs.weyl_character(lam)
        assert sum(ch.values()) == rs.weyl_dimension(lam) == _weyl_dim_oracle(rs, lam)


def test_known_characters(a2, c2):
    ch = a2.weyl_character((1, 1))
    assert sum(ch.values()) == 8 and ch[(0, 0)] == 2
    assert c2.weyl_dimension((1, 0)) == 4
    assert c2.weyl_dimension((0, 1)) == 5


@pytest.mark.parametrize("label", TYPES)
def test_characters_are_weyl_invariant(label):
    rs = build_root_system(label)
    for lam in rs.enumerate_dominant(6):
        ch = rs.weyl_character(lam)
        for w, m in ch.items():
            for i in range(rs.rank):
                assert ch.get(rs.reflect(w, i), 0) == m


@pytest.mark.parametrize("label", TYPES)
def test_w0_and_dual_weight(label):
    rs = build_root_system(label)
    for lam in rs.enumerate_dominant(8):
        assert rs.dual_weight(rs.dual_weight(lam)) == lam
        assert rs.is_dominant(rs.dual_weight(lam))
        assert rs.w0(lam) == rs.antidominant_rep(lam)


def test_enumeration_orders(a1, a2):
    assert a1.enumerate_dominant(3) == [(0,), (1,), (2,)]
    assert a2.enumerate_dominant(4) == [(0, 0), (0, 1), (1, 0), (0, 2)]


@pytest.mark.parametrize("label", TYPES)
def test_enumeration_refines_dominance(label):
    rs = build_root_system(label)
    seq = rs.enumerate_dominant(15)
    for i, a in enumerate(seq):
        for b in seq[:i]:
            assert not (rs.dominance_leq(a, b) and a != b)


def test_adjoint_tensor_multiplicities(a1, a2):
    assert a1.hom_to_adjoint_tensor((2,), (2,)) == 1
    assert a1.hom_to_adjoint_tensor((0,), (2,)) == 1
    assert a1.hom_to_adjoint_tensor((1,), (2,)) == 0
    # g (x) g for sl3 contains the adjoint twice
    assert a2.hom_to_adjoint_tensor((1, 1), (1, 1)) == 2


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2), st.integers(0, 2))
def test_tensor_decomposition_dimensions(a, b, c, d):
    rs = build_root_system("A2")
    x, y = (a, b), (c, d)
    dec = rs.decompose(rs.tensor_characters(rs.weyl_character(x), rs.weyl_character(y)))
    assert sum(m * rs.weyl_dimension(w) for w, m in dec.items()) == rs.weyl_dimension(x) * rs.weyl_dimension(y)
    assert dec.get(tuple(p + q for p, q in zip(x, y))) == 1


@given(st.sampled_from(TYPES), st.data())
def test_coordinate_roundtrip(label, data):
    rs = build_root_system(label)
    w = tuple(data.draw(st.integers(-4, 4)) for _ in range(rs.rank))
    assert rs.to_weight_coords(rs.to_root_coords(w)) == w
    assert rs.dominant_rep(w) in rs.orbit(w)


def test_window_weights(a1, a2):
    assert a1.window_weights((4,)) == [(0,), (1,), (2,), (3,), (4,)]
    assert a2.window_weights((1, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
