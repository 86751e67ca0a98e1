"""Named objects of the truncated categories: V, P, I, Delta, W and Nabla over Gamma."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from tiltcat.charring import GradedCharacter, TruncationSpec, char_dual
from tiltcat.modengine import (
    CyclicPresentation,
    ExplicitModule,
    build_cyclic,
    closure,
    dual_module,
    graded_character_of,
    irreducible,
    quotient,
    socle_of,
    top_generators,
    truncate_module,
)
from tiltcat.rootdata import RootSystem, build_root_system

INF = math.inf
FAMILIES = ("Simple", "Proj", "Inj", "Delta", "GlobalWeyl", "Nabla")
_ALIASES = {
    "simple": "Simple", "v": "Simple",
    "proj": "Proj", "p": "Proj", "projective": "Proj",
    "inj": "Inj", "i": "Inj", "injective": "Inj",
    "delta": "Delta", "local": "Delta", "standard": "Delta",
    "globalweyl": "GlobalWeyl", "w": "GlobalWeyl", "global": "GlobalWeyl", "weyl": "GlobalWeyl",
    "nabla": "Nabla", "costandard": "Nabla",
}


class DomainError(ValueError):
    """The request is mathematically ill-posed (bad Gamma, missing cutoff...)."""


def family_name(s: str) -> str:
    key = s.replace("-", "").replace("_", "").lower()
    if s in FAMILIES:
        return s
    if key not in _ALIASES:
        raise DomainError(f"unknown family {s!r}")
    return _ALIASES[key]


@dataclass(frozen=True)
class FamilyTag:
    family: str
    lam: tuple
    r: int
    gamma: TruncationSpec

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.r not in self.gamma:
            raise DomainError(f"grade {self.r} is not in J = {self.gamma.label()}")
        if any(c < 0 for c in self.lam):
            raise DomainError(f"{self.lam} is not dominant")


def build_object(rs: RootSystem, tag: FamilyTag, cutoff: int | None = None, check: bool = True) -> ExplicitModule:
    """Materialize a family member over Gamma.

    `cutoff` bounds the grade window when J is unbounded on the side that
    would otherwise make the object infinite-dimensional.
    """
    g = tag.gamma
    a = g.a if g.a > -INF else None
    b = g.b if g.b < INF else None
    mod = _build(rs.label, tag.family, tuple(tag.lam), tag.r, a, b, cutoff)
    if check:
        problems = object_check_failures(rs, tag, mod)
        if problems:
            raise DomainError(f"{mod.name}: post-checks failed: {problems}")
    return mod


@lru_cache(maxsize=None)
def _build(label, family, lam, r, a, b, cutoff):
    rs = build_root_system(label)
    gamma = TruncationSpec(-INF if a is None else a, INF if b is None else b)
    if family == "Simple":
        return irreducible(rs, lam, r)
    if family in ("Proj", "Delta", "GlobalWeyl"):
        kind = {"Proj": "P", "Delta": "Delta", "GlobalWeyl": "W"}[family]
        top = INF if b is None else b
        if top == INF and family != "Delta":
            if cutoff is None:
                raise DomainError(f"{family} over an unbounded-above J needs a grade cutoff")
            mod = build_cyclic(rs, CyclicPresentation(kind, lam, r, top), cutoff, cutoff)
            mod.certified = False
        else:
            wt = top if top < INF else (cutoff if cutoff is not None else None)
            mod = build_cyclic(rs, CyclicPresentation(kind, lam, r, top), wt,
                               None if cutoff is None else max(cutoff, r))
        name = {"Proj": "P", "Delta": "Delta", "GlobalWeyl": "W"}[family]
        mod.name = f"{name}({_w(lam)},{r}){gamma.label()}"
        return mod
    # Nabla and Inj are duals of objects over the reflected interval
    if a is None:
        if cutoff is None:
            raise DomainError(f"{family} over an unbounded-below J needs a grade cutoff")
        a_eff = cutoff
        certified = False
    else:
        a_eff, certified = a, True
    dual_lam = rs.dual_weight(lam)
    inner = "GlobalWeyl" if family == "Nabla" else "Proj"
    src = _build(label, inner, dual_lam, -r, -(b if b is not None else INF) if b is not None else None,
                 -a_eff, None)
    mod = dual_module(src)
    mod.certified = certified and src.certified
    mod.name = f"{'Nabla' if family == 'Nabla' else 'I'}({_w(lam)},{r}){gamma.label()}"
    return mod


def _w(lam):
    return ",".join(str(x) for x in lam)


def object_check_failures(rs: RootSystem, tag: FamilyTag, mod: ExplicitModule) -> list:
    """Structural properties every family member must have; returns failures."""
    fam, lam, r = tag.family, tuple(tag.lam), tag.r
    out = []
    top_dim = mod.weight_space_dim(lam, r)
    if fam in ("Simple", "Delta", "GlobalWeyl", "Nabla"):
        if top_dim != 1:
            out.append(f"dim M[{r}]_{lam} = {top_dim}")
        for w, _ in mod.labels:
            if not rs.hull_membership(w, lam):
                out.append(f"weight {w} outside conv W{lam}")
                break
    if fam == "Proj":
        if mod.weight_space_dim(lam, r) != 1 or len([l for l in mod.labels if l[1] == r]) != rs.weyl_dimension(lam):
            out.append("top slice is not V(lam)")
    for _, g in mod.labels:
        if mod.certified and g not in tag.gamma:
            out.append(f"grade {g} outside J")
            break
    if fam in ("Delta", "GlobalWeyl", "Proj", "Simple"):
        tops = [(w, g) for _, w, g in top_generators(mod)]
        if tops != [(lam, r)]:
            out.append(f"head is {tops}, expected a unique simple quotient V({lam},{r})")
    if fam in ("Nabla", "Inj", "Simple") and mod.certified:
        soc = socle_of(mod)
        if soc != {(lam, r): 1}:
            out.append(f"socle is {soc}")
    return out


def truncate(mod: ExplicitModule, gamma: TruncationSpec) -> ExplicitModule:
    return truncate_module(mod, gamma)


def character_of(rs: RootSystem, tag: FamilyTag, cutoff: int | None = None) -> GradedCharacter:
    return graded_character_of(build_object(rs, tag, cutoff, check=False))


def nabla_duality_character(rs: RootSystem, lam, r: int, gamma: TruncationSpec) -> GradedCharacter:
    """charDual of ch W(-w0 lam, -r)(Gamma'), computed independently of the Nabla build."""
    gp = gamma.reflected()
    w = build_object(rs, FamilyTag("GlobalWeyl", rs.dual_weight(lam), -r, gp), check=False)
    return char_dual(graded_character_of(w))


# ---------------------------------------------------------------------------
# truncation to a general finite set of (weight, grade) points


def quotient_to(mod: ExplicitModule, allowed) -> ExplicitModule:
    """V / V_{Lambda \\ Gamma}: kill the submodule generated by the highest-weight
    vectors whose (weight, grade) lies outside `allowed`; repeated until the
    head condition is stable."""
    rs = mod.rs
    cur = mod
    while True:
        bad = []
        for key, js in cur.blocks().items():
            if allowed(key) or not rs.is_dominant(key[0]):
                continue
            bad.extend(_highest_vectors(cur, js))
        if not bad:
            return cur
        S = closure(cur, bad)
        cur, proj = quotient(cur, S)
        # marks survive through the projection


def _highest_vectors(mod: ExplicitModule, js: list) -> list:
    from tiltcat.linalg import nullspace
    rs = mod.rs
    rows = {}
    for i in range(rs.rank):
        E = mod.gen(rs.simple_index(i, +1), 0)
        for k, j in enumerate(js):
            for t, x in E.col(j).items():
                rows.setdefault((i, t), {})[k] = x
    return [{js[k]: x for k, x in v.items()} for v in nullspace(list(rows.values()), len(js))]


def projective_over(rs: RootSystem, lam, r: int, points: frozenset) -> ExplicitModule:
    """P(lam, r)^Gamma for a finite set Gamma of (weight, grade) points."""
    grades = [g for _, g in points]
    gamma = TruncationSpec(min(grades), max(grades))
    P = build_object(rs, FamilyTag("Proj", tuple(lam), r, gamma), check=False)
    out = quotient_to(P, lambda key: key in points)
    out.name = f"P({_w(lam)},{r})^Gamma"
    return out


def injective_over(rs: RootSystem, lam, r: int, points: frozenset) -> ExplicitModule:
    """I(lam, r)_Gamma, the largest submodule of I(lam, r) with constituents in Gamma."""
    dual_pts = frozenset((rs.dual_weight(w), -g) for w, g in points)
    out = dual_module(projective_over(rs, rs.dual_weight(lam), -r, dual_pts))
    out.name = f"I({_w(lam)},{r})_Gamma"
    return out
