"""A compact invariant suite used by the ``selftest`` command."""
from __future__ import annotations

from tiltcat.catobjects import FamilyTag, build_object, nabla_duality_character, object_check_failures
from tiltcat.charring import TruncationSpec
from tiltcat.modengine import bracket_violations, graded_character_of
from tiltcat.orders import adjoint_face, order_predicate, partial_order_violations, psi_face_check
from tiltcat.rootdata import build_root_system
from tiltcat.tilting import (
    bgg_check,
    build_eta,
    build_sset,
    build_tilting,
    ext_simple_formula_violations,
    trivial_tilting_check,
    verify_enumeration,
)


def _jacobi():
    return all(not build_root_system(t).jacobi_violations() for t in ("A1", "A2", "A3", "C2"))


def _weyl_dims():
    for t in ("A1", "A2", "A3", "C2"):
        rs = build_root_system(t)
        for lam in rs.enumerate_dominant(12):
            if sum(rs.weyl_character(lam).values()) != rs.weyl_dimension(lam):
                return False
    return True


def _module_axioms(quick):
    rs = build_root_system("A1")
    tops = (0, 1) if quick else (0, 1, 2)
    for b in tops:
        g = TruncationSpec(0, b)
        for lam in range(0, 5 if not quick else 3):
            for r in range(0, b + 1):
                for fam in ("Delta", "GlobalWeyl", "Proj", "Nabla"):
                    tag = FamilyTag(fam, (lam,), r, g)
                    m = build_object(rs, tag, check=False)
                    if bracket_violations(m) or object_check_failures(rs, tag, m):
                        return False
    return True


def _duality():
    rs = build_root_system("A1")
    g = TruncationSpec(0, 1)
    for lam in range(3):
        for r in (0, 1):
            n = graded_character_of(build_object(rs, FamilyTag("Nabla", (lam,), r, g), check=False))
            if not n.same_terms(nabla_duality_character(rs, (lam,), r, g)):
                return False
    return True


def _ext_simple():
    rs = build_root_system("A1")
    pts = [((lam,), r) for lam in range(3) for r in (0, 1)]
    return not ext_simple_formula_violations(rs, pts)


def _orders():
    rs = build_root_system("A1")
    face = adjoint_face(rs, [(2,)])
    if not psi_face_check(face):
        return False
    pts = [((w,), g) for w in range(5) for g in range(-2, 3)]
    return all(not partial_order_violations(pts, order_predicate(rs, k, face)) for k in ("lex", "covering", "psi"))


def _sset():
    rs = build_root_system("A1")
    for gamma in (TruncationSpec(0, 1), TruncationSpec(float("-inf"), 0)):
        for lam in range(3):
            spec = build_sset(rs, gamma, ((lam,), 0))
            verify_enumeration(rs, spec, build_eta(spec, 3))
    return True


def _tilting():
    rs = build_root_system("A1")
    g = TruncationSpec(0, 1)
    for lam in range(3):
        for r in (0, 1):
            build_tilting(rs, g, ((lam,), r))
    return True


def _bgg():
    rs = build_root_system("A1")
    rep = bgg_check(rs, TruncationSpec(0, 1), (4,))
    return bool(rep.conventions_holding("projective")) and bool(rep.conventions_holding("injective"))


def _trivial():
    rs = build_root_system("A1")
    g = TruncationSpec(0, 1)
    return (trivial_tilting_check(rs, g, "covering", (4,)).passed
            and trivial_tilting_check(rs, g, "psi", (4,), adjoint_face(rs, [(2,)])).passed)


def run(quick: bool = True) -> list:
    checks = [
        ("Jacobi identity on Chevalley bases", _jacobi),
        ("Weyl characters match the dimension formula", _weyl_dims),
        ("module axioms and structural post-checks", lambda: _module_axioms(quick)),
        ("Nabla character duality", _duality),
        ("Ext^1 between simples", _ext_simple),
        ("partial-order laws", _orders),
        ("S/eta enumeration invariants", _sset),
        ("tilting certificates", _tilting),
        ("BGG reciprocity conventions", _bgg),
        ("trivial tilting theories", _trivial),
    ]
    out = []
    for name, fn in checks:
        try:
            ok = bool(fn())
        except Exception as exc:  # a crashing check is a failing check
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        out.append({"name": name, "passed": ok})
    return out
