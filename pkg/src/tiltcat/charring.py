"""Graded characters: elements of Z[P][u, u^-1] valid on a grade window."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from tiltcat.rootdata import RootSystem

INF = math.inf


def _fmt_end(x):
    if x == -INF:
        return "-inf"
    if x == INF:
        return "+inf"
    return int(x)


def _parse_end(x):
    if x in ("-inf", "+inf", "inf"):
        return -INF if x == "-inf" else INF
    return int(x)


@dataclass(frozen=True)
class TruncationSpec:
    """The interval J = [a, b] of allowed grades, plus an optional weight cap."""

    a: float = -INF
    b: float = INF
    cap: tuple | None = None

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError(f"empty grade interval [{self.a}, {self.b}]")
        for x in (self.a, self.b):
            if x not in (-INF, INF) and int(x) != x:
                raise ValueError("interval ends must be integers or infinite")

    def __contains__(self, r) -> bool:
        return self.a <= r <= self.b

    @property
    def finite(self) -> bool:
        return self.a > -INF and self.b < INF

    def reflected(self) -> "TruncationSpec":
        cap = None
        return TruncationSpec(-self.b, -self.a, cap)

    def grades(self, lo=None, hi=None) -> list:
        a = self.a if lo is None else max(self.a, lo)
        b = self.b if hi is None else min(self.b, hi)
        if a == -INF or b == INF:
            raise ValueError("grade range is unbounded; supply a cutoff")
        return list(range(int(a), int(b) + 1))

    def label(self) -> str:
        return f"[{_fmt_end(self.a)}, {_fmt_end(self.b)}]"

    def as_record(self) -> dict:
        out = {"a": _fmt_end(self.a), "b": _fmt_end(self.b)}
        if self.cap is not None:
            out["cap"] = list(self.cap)
        return out


@dataclass
class GradedCharacter:
    """Finitely supported map (weight, grade) -> integer, valid on a grade window."""

    terms: dict = field(default_factory=dict)
    window: tuple = (-INF, INF)

    def __post_init__(self):
        self.terms = {(tuple(w), int(g)): int(m) for (w, g), m in self.terms.items() if m}
        lo, hi = self.window
        for (_, g) in self.terms:
            if not lo <= g <= hi:
                raise ValueError(f"term at grade {g} outside window {self.window}")

    @classmethod
    def from_weights(cls, weights: dict, grade: int, window=None) -> "GradedCharacter":
        win = window if window is not None else (-INF, INF)
        return cls({(w, grade): m for w, m in weights.items()}, win)

    def restrict(self, window) -> "GradedCharacter":
        lo = max(self.window[0], window[0])
        hi = min(self.window[1], window[1])
        return GradedCharacter({k: m for k, m in self.terms.items() if lo <= k[1] <= hi}, (lo, hi))

    def __add__(self, other):
        win = (max(self.window[0], other.window[0]), min(self.window[1], other.window[1]))
        out = {}
        for src in (self.restrict(win).terms, other.restrict(win).terms):
            for k, m in src.items():
                out[k] = out.get(k, 0) + m
        return GradedCharacter(out, win)

    def scaled(self, c: int) -> "GradedCharacter":
        return GradedCharacter({k: c * m for k, m in self.terms.items()}, self.window)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.terms == other.terms and tuple(self.window) == tuple(other.window)

    def same_terms(self, other) -> bool:
        return self.terms == other.terms

    def shifted(self, k: int) -> "GradedCharacter":
        lo, hi = self.window
        return GradedCharacter({(w, g + k): m for (w, g), m in self.terms.items()}, (lo + k, hi + k))

    @property
    def is_virtual(self) -> bool:
        return any(m < 0 for m in self.terms.values())

    def dimension(self) -> int:
        return sum(self.terms.values())

    def grades(self) -> list:
        return sorted({g for (_, g) in self.terms})

    def slice(self, grade: int) -> dict:
        return {w: m for (w, g), m in self.terms.items() if g == grade}

    def get(self, weight, grade) -> int:
        return self.terms.get((tuple(weight), grade), 0)

    def to_record(self) -> dict:
        rows = [{"weight": list(w), "grade": g, "mult": m} for (w, g), m in sorted(self.terms.items(), key=_term_key)]
        return {"terms": rows, "window": [_fmt_end(self.window[0]), _fmt_end(self.window[1])]}

    @classmethod
    def from_record(cls, rec: dict) -> "GradedCharacter":
        terms = {(tuple(r["weight"]), r["grade"]): r["mult"] for r in rec["terms"]}
        return cls(terms, (_parse_end(rec["window"][0]), _parse_end(rec["window"][1])))


def _term_key(item):
    (w, g), _ = item
    return (g, tuple(-x for x in w))


def char_mul(x: GradedCharacter, y: GradedCharacter, window) -> GradedCharacter:
    """Product in Z[P][u, u^-1], truncated to the finite grade window."""
    lo, hi = window
    if lo == -INF or hi == INF:
        raise ValueError("char_mul needs a finite window")
    out = {}
    for (wa, ga), ma in x.terms.items():
        for (wb, gb), mb in y.terms.items():
            g = ga + gb
            if lo <= g <= hi:
                k = (tuple(a + b for a, b in zip(wa, wb)), g)
                out[k] = out.get(k, 0) + ma * mb
    return GradedCharacter(out, (lo, hi))


def char_dual(x: GradedCharacter) -> GradedCharacter:
    lo, hi = x.window
    return GradedCharacter({(tuple(-a for a in w), -g): m for (w, g), m in x.terms.items()}, (-hi, -lo))


def unit_character(rs: RootSystem, window=(0, 0)) -> GradedCharacter:
    return GradedCharacter({(rs.zero, 0): 1}, window)


def simple_character(rs: RootSystem, lam, r: int, window=None) -> GradedCharacter:
    win = window if window is not None else (r, r)
    return GradedCharacter({(w, r): m for w, m in rs.weyl_character(lam).items()}, win)


def u_plus_character(rs: RootSystem, grade_bound: int) -> GradedCharacter:
    """Character of the enveloping algebra of g (x) tC[t], through grade `grade_bound`."""
    window = (0, grade_bound)
    basis_weights = [rs.zero] * rs.rank + list(rs.root_weights)
    acc = {(rs.zero, 0): 1}
    for k in range(1, grade_bound + 1):
        for nu in basis_weights:
            # multiply by 1 / (1 - e^nu u^k)
            # increasing grade order makes repeated powers accumulate
            new = dict(acc)
            for g in range(0, grade_bound + 1):
                for (w, gg), m in list(new.items()):
                    if gg != g or g + k > grade_bound:
                        continue
                    key = (tuple(a + b for a, b in zip(w, nu)), g + k)
                    new[key] = new.get(key, 0) + m
            acc = new
    return GradedCharacter(acc, window)


def projective_character(rs: RootSystem, lam, r: int, top: int) -> GradedCharacter:
    """ch P(lam, r) through grade `top`: the U(g[t]_+) character times ch V(lam)."""
    if top < r:
        raise ValueError("top grade below the generator grade")
    up = u_plus_character(rs, top - r).shifted(r)
    return char_mul(up, simple_character(rs, lam, 0, (0, 0)), (r, top))


def simple_decompose(rs: RootSystem, x: GradedCharacter) -> dict:
    """Simple multiplicities {(dominant weight, grade): m} by highest-weight stripping."""
    if x.is_virtual:
        raise ValueError("virtual character: simple decomposition needs a module character")
    out = {}
    for g in x.grades():
        try:
            dec = rs.decompose(x.slice(g))
        except ValueError as exc:
            raise ValueError(f"grade {g}: {exc}") from None
        for w, m in dec.items():
            out[(w, g)] = m
    return out


class NoFiltration(ValueError):
    pass


FAMILY_ORIENTATION = {"Delta": "up", "GlobalWeyl": "up", "Nabla": "down"}


def filtration_multiplicities(rs: RootSystem, x: GradedCharacter, family: str, gamma: TruncationSpec,
                              family_char, enumeration=None) -> dict:
    """Multiplicities of x in a standard-type family, by triangular elimination.

    `family_char(mu, s)` must return the family member's character on x's
    window.  For the upward families (Delta, GlobalWeyl) the leading term is
    the weight with the largest enumeration index, then the lowest grade; for
    Nabla the highest grade comes first.
    """
    if x.is_virtual:
        raise NoFiltration("virtual character")
    orient = FAMILY_ORIENTATION[family]
    if enumeration is not None:
        index = {tuple(w): k for k, w in enumerate(enumeration)}

        def wkey(w):
            if w not in index:
                raise NoFiltration(f"weight {w} is not in the supplied enumeration")
            return index[w]
    else:
        def wkey(w):
            return rs.dominant_key(w)

    residual = dict(x.terms)
    out = {}
    guard = 0
    while residual:
        dom = [k for k, m in residual.items() if rs.is_dominant(k[0])]
        if not dom:
            raise NoFiltration("residual has no dominant weights")
        if orient == "up":
            lead = max(dom, key=lambda k: (wkey(k[0]), -k[1]))
        else:
            lead = max(dom, key=lambda k: (wkey(k[0]), k[1]))
        mu, s = lead
        c = residual[lead]
        if c < 0:
            raise NoFiltration(f"negative leading coefficient at {lead}")
        if s not in gamma:
            raise NoFiltration(f"leading term {lead} lies outside the truncation")
        fc = family_char(mu, s)
        if fc.get(mu, s) != 1:
            raise NoFiltration(f"family member at {lead} does not have a unit leading term")
        out[lead] = out.get(lead, 0) + c
        for k, m in fc.terms.items():
            if not x.window[0] <= k[1] <= x.window[1]:
                continue
            v = residual.get(k, 0) - c * m
            if v:
                residual[k] = v
            else:
                residual.pop(k, None)
        guard += 1
        if guard > 10000:
            raise NoFiltration("elimination did not terminate")
    return dict(sorted(out.items(), key=lambda it: (wkey(it[0][0]), it[0][1])))


def combine(family_char, mults: dict, window) -> GradedCharacter:
    """Sum of m * ch(member) over a multiplicity map; inverse of the elimination."""
    lo, hi = window
    acc = {}
    for (mu, s), m in mults.items():
        for (w, g), c in family_char(mu, s).terms.items():
            if lo <= g <= hi:
                acc[(w, g)] = acc.get((w, g), 0) + m * c
    return GradedCharacter(acc, window)
