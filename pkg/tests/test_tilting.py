import math

import pytest

from tiltcat.catobjects import DomainError, FamilyTag, build_object
from tiltcat.charring import TruncationSpec
from tiltcat.modengine import direct_sum, end_algebra_analysis, is_isomorphic, irreducible
from tiltcat.orders import adjoint_face
from tiltcat.tilting import (
    ExtVanish,
    bgg_check,
    build_eta,
    build_sset,
    build_tilting,
    certify_tilting,
    delta,
    ext_delta_delta,
    ext_vanish_predicate,
    sset_closure_violations,
    trivial_tilting_check,
    verify_enumeration,
    verify_nabla_criterion,
)

INF = math.inf
J01 = TruncationSpec(0, 1)
JNEG = TruncationSpec(-INF, 0)


def test_sset_finite(a1):
    spec = build_sset(a1, J01, ((2,), 1))
    assert spec.enumeration == [(0,), (1,), (2,)]
    assert spec.bounds[-1] == 1
    eta = build_eta(spec)
    assert eta[0] == ((2,), 1)
    assert len(eta) == len(set(eta)) == len(spec.members())
    verify_enumeration(a1, spec, eta)


def test_sset_unbounded_below(a1):
    spec = build_sset(a1, JNEG, ((2,), 0))
    assert spec.bounds == [0, 0, 0]
    assert spec.primed == [1, 1, 0]
    assert spec.gaps == [0, 1]
    eta = build_eta(spec, depth=3)
    assert eta[:4] == [((2,), 0), ((2,), -1), ((1,), 0), ((0,), 0)]
    verify_enumeration(a1, spec, eta)


def test_sset_closure(a1):
    spec = build_sset(a1, J01, ((2,), 0))
    outside = [((m,), s) for m in range(4) for s in (0, 1)]
    assert sset_closure_violations(a1, spec, outside) == []


def test_anchor_outside_J(a1):
    with pytest.raises(DomainError):
        build_sset(a1, J01, ((1,), 2))


def test_vanishing_predicate_agrees_with_ext(a1):
    spec = build_sset(a1, JNEG, ((2,), 0))
    pts = [((m,), s) for m in range(3) for s in (-2, -1, 0)]
    gamma = TruncationSpec(-2, 0)
    for p in pts:
        for q in pts:
            if ext_vanish_predicate(a1, p, q, JNEG, spec) is ExtVanish.GUARANTEED_ZERO:
                # the finite window [-2, 0] is a quotient-closed piece where the claim is checkable
                if p[0] == q[0] or not a1.dominance_leq(p[0], q[0]):
                    assert ext_delta_delta(a1, p, q, gamma)[0] == 0


EXPECTED_DIMS = {((0,), 0): 1, ((0,), 1): 1, ((1,), 0): 2, ((1,), 1): 4, ((2,), 0): 4, ((2,), 1): 8}


@pytest.fixture(scope="module")
def tiltings():
    from tiltcat.rootdata import build_root_system
    rs = build_root_system("A1")
    return {a: build_tilting(rs, J01, a) for a in EXPECTED_DIMS}


def test_tilting_dims_and_certificates(a1, tiltings):
    for anchor, (T, cert, tower) in tiltings.items():
        assert T.dim == EXPECTED_DIMS[anchor]
        assert cert.failures() == []
        assert tower[0].point == anchor
        again = certify_tilting(a1, T, J01, anchor)
        assert again.as_record() == cert.as_record()


def test_tiltings_pairwise_distinct(tiltings):
    mods = [t[0] for t in tiltings.values()]
    for i in range(len(mods)):
        for j in range(i + 1, len(mods)):
            assert not is_isomorphic(mods[i], mods[j])


def test_endomorphism_dichotomy(a1, tiltings):
    T = tiltings[((1,), 1)][0]
    S, _ = direct_sum([T, T])
    assert end_algebra_analysis(T).indecomposable
    assert not end_algebra_analysis(S).indecomposable
    # a sum of tiltings is still Nabla-filtered
    assert verify_nabla_criterion(a1, S, J01).holds


def test_certificate_detects_non_tilting(a1):
    # over [0, 1], Delta(2w1, 1) is the simple V(2w1, 1), which extends by lower grades
    D = delta(a1, (2,), 1, J01)
    assert D.dim == 3
    cert = certify_tilting(a1, D, J01, ((2,), 1))
    assert any("Ext" in f for f in cert.failures())
    assert not cert.nabla


def test_single_grade_tilting_is_simple(a1):
    for m in range(4):
        J = TruncationSpec(1, 1)
        T, cert, _ = build_tilting(a1, J, ((m,), 1))
        assert is_isomorphic(T, irreducible(a1, (m,), 1))


def test_infinite_J_is_refused(a1):
    with pytest.raises(DomainError):
        build_tilting(a1, JNEG, ((1,), 0))


def test_bgg_instance(a1):
    rep = bgg_check(a1, J01, (4,))
    got = {q: m for (p, q), m in rep.projective_side.items() if p == ((2,), 0) and m}
    assert got == {((2,), 0): 1, ((4,), 1): 1}
    assert rep.conventions_holding("projective")
    assert rep.conventions_holding("injective")


def test_trivial_tilting(a1):
    assert trivial_tilting_check(a1, J01, "covering", (4,)).passed
    rep = trivial_tilting_check(a1, J01, "psi", (4,), adjoint_face(a1, [(2,)]))
    assert rep.passed, rep.failures


def test_nabla_build_has_nabla_filtration(a1):
    N = build_object(a1, FamilyTag("Nabla", (2,), 1, J01))
    assert verify_nabla_criterion(a1, N, J01).holds
