import math

import pytest

from tiltcat.catobjects import (
    DomainError,
    FamilyTag,
    build_object,
    family_name,
    injective_over,
    nabla_duality_character,
    object_check_failures,
    projective_over,
)
from tiltcat.charring import TruncationSpec, projective_character, simple_decompose
from tiltcat.modengine import bracket_violations, graded_character_of

INF = math.inf
J01 = TruncationSpec(0, 1)


def test_family_aliases():
    assert family_name("delta") == "Delta"
    assert family_name("W") == "GlobalWeyl"
    assert family_name("costandard") == "Nabla"
    with pytest.raises(DomainError):
        family_name("tilting-ish")


def test_tag_validation():
    with pytest.raises(DomainError):
        FamilyTag("Delta", (1,), 3, J01)
    with pytest.raises(DomainError):
        FamilyTag("Delta", (-1,), 0, J01)


@pytest.mark.parametrize("fam,lam,r,dim", [
    ("Proj", (2,), 0, 12), ("Delta", (2,), 0, 4), ("GlobalWeyl", (2,), 0, 7), ("Nabla", (2,), 1, 7),
])
def test_a1_dimensions(a1, fam, lam, r, dim):
    M = build_object(a1, FamilyTag(fam, lam, r, J01))
    assert M.dim == dim
    assert bracket_violations(M) == []


def test_projective_matches_character(a1, a2):
    for rs, lam in ((a1, (2,)), (a2, (1, 0))):
        P = build_object(rs, FamilyTag("Proj", lam, 0, J01))
        assert graded_character_of(P).same_terms(projective_character(rs, lam, 0, 1))


@pytest.mark.parametrize("lam", [(0,), (1,), (2,), (3,)])
def test_nabla_duality(a1, lam):
    N = build_object(a1, FamilyTag("Nabla", lam, 1, J01))
    assert graded_character_of(N).same_terms(nabla_duality_character(a1, lam, 1, J01))


def test_post_checks_hold_a2(a2):
    for fam in ("Simple", "Delta", "GlobalWeyl", "Proj", "Nabla", "Inj"):
        tag = FamilyTag(fam, (1, 1), 0, J01)
        assert object_check_failures(a2, tag, build_object(a2, tag, check=False)) == []


def test_unbounded_needs_cutoff(a1):
    with pytest.raises(DomainError):
        build_object(a1, FamilyTag("Nabla", (1,), 0, TruncationSpec(-INF, 0)))
    with pytest.raises(DomainError):
        build_object(a1, FamilyTag("Proj", (1,), 0, TruncationSpec(0, INF)))
    N = build_object(a1, FamilyTag("Nabla", (1,), 0, TruncationSpec(-INF, 0)), cutoff=-2, check=False)
    assert not N.certified


def test_delta_is_finite_when_unbounded(a1):
    D = build_object(a1, FamilyTag("Delta", (3,), 0, TruncationSpec(0, INF)))
    assert D.certified and D.dim == 8


def test_projective_over_point_set(a1):
    pts = frozenset([((2,), 0), ((0,), 1)])
    P = projective_over(a1, (2,), 0, pts)
    assert simple_decompose(a1, graded_character_of(P)) == {((2,), 0): 1, ((0,), 1): 1}
    I = injective_over(a1, (0,), 1, pts)
    assert simple_decompose(a1, graded_character_of(I)) == {((2,), 0): 1, ((0,), 1): 1}
