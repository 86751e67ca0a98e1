"""Partial orders on dominant-weight/grade pairs.

Three relations are provided: the lexicographic order (dominance first, then
grade), the order generated by the covering relation (one grade step and a
weight change in R or 0), and the face order attached to a subset Psi of the
weights of a finite-dimensional module.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from tiltcat.rootdata import RootSystem, build_root_system

INF = math.inf


@dataclass(frozen=True)
class LamPoint:
    weight: tuple
    grade: int

    @classmethod
    def of(cls, p) -> "LamPoint":
        if isinstance(p, LamPoint):
            return p
        w, g = p
        return cls(tuple(w), int(g))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def lex_leq(rs: RootSystem, p, q) -> bool:
    """(mu, r) <= (lam, s) iff mu < lam, or mu = lam and r <= s."""
    p, q = LamPoint.of(p), LamPoint.of(q)
    if p.weight == q.weight:
        return p.grade <= q.grade
    return rs.dominance_leq(p.weight, q.weight)


@lru_cache(maxsize=None)
def _step_layers(label: str, k: int) -> frozenset:
    """Weights that are sums of exactly k elements of R and 0 (fundamental coordinates)."""
    rs = build_root_system(label)
    if k == 0:
        return frozenset([rs.zero])
    prev = _step_layers(label, k - 1)
    steps = [rs.zero] + [tuple(w) for w in rs.root_weights]
    return frozenset(_add(w, s) for w in prev for s in steps)


def covering_leq(rs: RootSystem, p, q) -> bool:
    """The order generated by: (mu, s) covers (lam, r) iff s = r + 1 and mu - lam in R or 0."""
    p, q = LamPoint.of(p), LamPoint.of(q)
    k = q.grade - p.grade
    if k < 0:
        return False
    diff = _sub(q.weight, p.weight)
    if k == 0:
        return diff == rs.zero
    if not rs.in_root_lattice(diff):
        return False
    # 0 is a step, so the layers are nested; a cheap height filter first
    if sum(abs(x) for x in rs.to_root_coords(diff)) > k * _max_root_height(rs):
        return False
    return diff in _step_layers(rs.label, k)


def covers(rs: RootSystem, p, q) -> bool:
    """One covering step from p up to q."""
    p, q = LamPoint.of(p), LamPoint.of(q)
    diff = _sub(q.weight, p.weight)
    return q.grade == p.grade + 1 and (diff == rs.zero or rs.is_root(diff))


def _max_root_height(rs):
    return max(sum(abs(x) for x in rs.to_root_coords(w)) for w in rs.root_weights)


# ---------------------------------------------------------------------------
# face order


@dataclass(frozen=True)
class PsiFace:
    """A subset psi of the distinct weights of a finite multiset `ambient`."""

    ambient: tuple            # ((weight, multiplicity), ...)
    psi: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        distinct = {w for w, _ in self.ambient}
        missing = [w for w in self.psi if w not in distinct]
        if missing:
            raise ValueError(f"psi contains weights outside the ambient set: {missing}")

    @classmethod
    def from_weights(cls, weights, psi) -> "PsiFace":
        cnt = Counter(tuple(w) for w in weights)
        return cls(tuple(sorted(cnt.items())), frozenset(tuple(w) for w in psi))

    @property
    def weights(self) -> list:
        return sorted(w for w, _ in self.ambient)


def adjoint_face(rs: RootSystem, psi) -> PsiFace:
    """Face data for V = g: ambient weights R with 0 of multiplicity rank."""
    weights = [tuple(w) for w in rs.root_weights] + [rs.zero] * rs.rank
    return PsiFace.from_weights(weights, [tuple(w) for w in psi])


@dataclass(frozen=True)
class FaceVerdict:
    holds: bool
    radius: int
    witness: tuple | None = None   # (m over psi, n over ambient), as sorted item tuples

    def __bool__(self):
        return self.holds


def default_radius(face: PsiFace) -> int:
    """Coefficient-sum bound for the search: max coordinate times the box diameter."""
    if not face.ambient:
        return 0
    coord = max(abs(x) for w, _ in face.ambient for x in w) or 1
    rank = len(face.ambient[0][0])
    return max(2, coord * (rank + 1))


def psi_face_check(face: PsiFace, radius: int | None = None) -> FaceVerdict:
    """Test both face conditions on all decompositions with coefficient sums <= radius.

    (1) sum_psi m_nu nu = sum_wt n_mu mu implies sum m <= sum n;
    (2) equality of the sums forces n_mu = 0 off psi.
    """
    B = default_radius(face) if radius is None else radius
    psi = sorted(face.psi)
    if not psi:
        return FaceVerdict(True, B)
    amb = face.weights
    zero = tuple(0 for _ in amb[0])
    # exact-length reachable sets, tracking one decomposition for witnesses
    psi_layers = [{zero: ()}]
    for _ in range(B):
        nxt = {}
        for x, dec in psi_layers[-1].items():
            for nu in psi:
                y = _add(x, nu)
                if y not in nxt:
                    nxt[y] = dec + (nu,)
        psi_layers.append(nxt)
    # ambient states carry a flag: whether some weight outside psi was used
    amb_layers = [{(zero, False): ()}]
    for _ in range(B):
        nxt = {}
        for (x, off), dec in amb_layers[-1].items():
            for mu in amb:
                key = (_add(x, mu), off or mu not in face.psi)
                if key not in nxt:
                    nxt[key] = dec + (mu,)
        amb_layers.append(nxt)
    for M in range(1, B + 1):
        for x, mdec in psi_layers[M].items():
            for N in range(0, M + 1):
                for off in (False, True):
                    ndec = amb_layers[N].get((x, off))
                    if ndec is None:
                        continue
                    if N < M or (N == M and off):
                        return FaceVerdict(False, B, (_count(mdec), _count(ndec)))
    return FaceVerdict(True, B)


def _count(dec) -> tuple:
    return tuple(sorted(Counter(dec).items()))


def psi_distance(mu, lam, face: PsiFace, bound: int | None = None):
    """min sum m with lam - mu = sum m_nu nu over psi; infinity if unreachable."""
    target = _sub(tuple(lam), tuple(mu))
    psi = sorted(face.psi)
    zero = tuple(0 for _ in target)
    if target == zero:
        return 0
    if not psi:
        return INF
    if bound is None:
        bound = _ambient_length(face, target)
        if bound == INF:
            return INF
    # walk from the target toward 0 by subtracting psi elements
    layer = {target}
    seen = {target}
    for k in range(1, int(bound) + 1):
        nxt = set()
        for x in layer:
            for nu in psi:
                y = _sub(x, nu)
                if y == zero:
                    return k
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        layer = nxt
        if not layer:
            break
    return INF


@lru_cache(maxsize=4096)
def _ambient_length(face: PsiFace, target: tuple):
    """Shortest decomposition of target by ambient weights; for a face this bounds any psi-length."""
    amb = [w for w in face.weights if any(w)]
    zero = tuple(0 for _ in target)
    if target == zero:
        return 0
    if not amb:
        return INF
    # a crude box keeps the search finite
    span = max(abs(x) for x in target)
    box = span + max(abs(x) for w in amb for x in w) * 2
    layer, seen = {zero}, {zero}
    k = 0
    while layer:
        k += 1
        nxt = set()
        for x in layer:
            for w in amb:
                y = _add(x, w)
                if y == target:
                    return k
                if y not in seen and max(abs(c) for c in y) <= box:
                    seen.add(y)
                    nxt.add(y)
        layer = nxt
    return INF


def psi_leq(p, q, face: PsiFace) -> bool:
    """(lam, r) precedes (mu, s): mu - lam in Z+ psi, s - r >= 0 and d(lam, mu) = s - r."""
    p, q = LamPoint.of(p), LamPoint.of(q)
    gap = q.grade - p.grade
    if gap < 0:
        return False
    d = psi_distance(p.weight, q.weight, face)
    return d != INF and d == gap


def order_predicate(rs: RootSystem, kind: str, face: PsiFace | None = None):
    """A two-argument predicate for the named order."""
    if kind == "lex":
        return lambda p, q: lex_leq(rs, p, q)
    if kind == "covering":
        return lambda p, q: covering_leq(rs, p, q)
    if kind == "psi":
        if face is None:
            raise ValueError("the psi order needs a face")
        return lambda p, q: psi_leq(p, q, face)
    raise ValueError(f"unknown order {kind!r}")


def partial_order_violations(points: list, leq) -> list:
    """Reflexivity, antisymmetry and transitivity failures on a finite sample."""
    pts = [LamPoint.of(p) for p in points]
    rel = {(i, j): leq(p, q) for i, p in enumerate(pts) for j, q in enumerate(pts)}
    out = []
    n = len(pts)
    for i in range(n):
        if not rel[(i, i)]:
            out.append(("reflexive", pts[i]))
    for i in range(n):
        for j in range(i + 1, n):
            if rel[(i, j)] and rel[(j, i)]:
                out.append(("antisymmetric", pts[i], pts[j]))
    succ = {i: [j for j in range(n) if rel[(i, j)]] for i in range(n)}
    for i in range(n):
        for j in succ[i]:
            for k in succ[j]:
                if not rel[(i, k)]:
                    out.append(("transitive", pts[i], pts[j], pts[k]))
    return out
