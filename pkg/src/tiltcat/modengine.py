"""Explicit graded g[t]-modules and the homological algebra built on them.

A module stores a labeled basis, each label being (weight, grade), and exact
action matrices for x (x) t^d with x a Chevalley basis element and d in {0, 1}.
Those generate U(g[t]), so every construction below (closures, Hom, Ext^1)
only ever needs these matrices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from tiltcat.charring import GradedCharacter, TruncationSpec
from tiltcat.linalg import ONE, ZERO, Echelon, SMat, nullspace, q, vadd, vscale
from tiltcat.pbw import TruncatedEnvelope
from tiltcat.rootdata import RootSystem, build_root_system

INF = math.inf


class WindowError(RuntimeError):
    """A build could not be certified inside the allowed window."""


@dataclass
class ExplicitModule:
    rs: RootSystem
    labels: list
    action: dict                     # (k, d) -> SMat
    window: tuple = (-INF, INF)
    certified: bool = True
    name: str = ""
    marks: dict = field(default_factory=dict)   # named vectors carried through maps

    @property
    def dim(self) -> int:
        return len(self.labels)

    def gen(self, k: int, d: int) -> SMat:
        m = self.action.get((k, d))
        if m is None:
            m = SMat.zero(self.dim, self.dim)
        return m

    def blocks(self) -> dict:
        out = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return out

    def grades(self) -> list:
        return sorted({g for _, g in self.labels})

    def indices(self, weight, grade) -> list:
        key = (tuple(weight), grade)
        return [i for i, lab in enumerate(self.labels) if lab == key]

    def weight_space_dim(self, weight, grade) -> int:
        return len(self.indices(weight, grade))

    def character(self) -> GradedCharacter:
        return graded_character_of(self)

    def __repr__(self):
        return f"ExplicitModule({self.name or '?'}, dim={self.dim}, certified={self.certified})"


def generating_set(rs: RootSystem) -> list:
    """Generators of U(g[t]) as an algebra: e_i, f_i and x_{-theta} (x) t."""
    gens = []
    for i in range(rs.rank):
        gens.append((rs.simple_index(i, +1), 0))
        gens.append((rs.simple_index(i, -1), 0))
    gens.append((rs.npos + rs.npos - 1, 1))
    return gens


def all_generators(rs: RootSystem) -> list:
    return [(k, d) for d in (0, 1) for k in range(rs.dim)]


def _label_shift(rs, lab, gen):
    w, g = lab
    k, d = gen
    return (tuple(a + b for a, b in zip(w, rs.basis_weight(k))), g + d)


# ---------------------------------------------------------------------------
# irreducible g-modules


@lru_cache(maxsize=None)
def _irreducible_data(label: str, lam: tuple):
    """Weights and Chevalley-basis matrices of V(lam).

    Each weight space below the top is embedded into the sum of the weight
    spaces above it via v -> (e_1 v, ..., e_l v); this map is injective on an
    irreducible module, so spans of f_i u can be compared exactly.
    """
    rs = build_root_system(label)
    n = rs.rank
    simple = [rs.simple_root(i) for i in range(n)]
    ch = rs.weyl_character(lam)
    order = sorted(ch, key=lambda w: (rs.height(lam) - rs.height(w), tuple(-x for x in w)))
    block = {}
    weights = []
    E = [dict() for _ in range(n)]   # E[i][global idx] -> vector
    F = [dict() for _ in range(n)]   # F[i][global idx] -> vector

    def add_w(a, b):
        return tuple(x + y for x, y in zip(a, b))

    for mu in order:
        if mu == lam:
            block[mu] = [0]
            weights.append(mu)
            for i in range(n):
                E[i][0] = {}
            continue
        cands = []   # (i, u, image vector, components)
        for i in range(n):
            up = add_w(mu, simple[i])
            if up not in block:
                continue
            for u in block[up]:
                comps = []
                for j in range(n):
                    comp = {}
                    ej_u = E[j][u]
                    for w_idx, c in ej_u.items():
                        comp = vadd(comp, F[i].get(w_idx, {}), c)
                    if i == j:
                        comp = vadd(comp, {u: q(up[i])})
                    comps.append(comp)
                img = {}
                for comp in comps:
                    img.update(comp)
                cands.append((i, u, img, comps))
        ech = Echelon(track_payload=True)
        chosen = []
        start = len(weights)
        for i, u, img, comps in cands:
            if ech.add(img, {start + len(chosen): ONE}):
                chosen.append((img, comps))
        assert len(chosen) == ch[mu], f"dimension mismatch at {mu}: {len(chosen)} vs {ch[mu]}"
        block[mu] = list(range(start, start + len(chosen)))
        for idx, (img, comps) in zip(block[mu], chosen):
            weights.append(mu)
            for j in range(n):
                E[j][idx] = comps[j]
        for i, u, img, comps in cands:
            r, pl = ech.reduce(img, {})
            assert not r
            F[i][u] = {k: -x for k, x in pl.items()}
    dim = len(weights)
    mats = {}
    for i in range(n):
        mats[rs.simple_index(i, +1)] = SMat(dim, dim, {j: v for j, v in E[i].items() if v})
        mats[rs.simple_index(i, -1)] = SMat(dim, dim, {j: v for j, v in F[i].items() if v})
        mats[rs.h_index(i)] = SMat(dim, dim, {j: {j: q(weights[j][i])} for j in range(dim) if weights[j][i]})
    _complete_chevalley(rs, mats, dim)
    return tuple(weights), mats


def _complete_chevalley(rs: RootSystem, mats: dict, dim: int):
    """Fill in all root vectors from the simple ones using the structure constants."""
    for sign in (+1, -1):
        for kk in range(rs.npos):
            k = kk if sign > 0 else kk + rs.npos
            if k in mats:
                continue
            rc = rs.pos_roots[kk]
            for i in range(rs.rank):
                beta = tuple(c - int(j == i) for j, c in enumerate(rc))
                if beta in rs._rc_lookup and sum(beta) > 0:
                    a = rs.simple_index(i, sign)
                    b = rs._rc_lookup[beta] + (0 if sign > 0 else rs.npos)
                    nab = rs.structure[(a, b)]
                    comm = mats[a] @ mats[b] - mats[b] @ mats[a]
                    mats[k] = comm.scale(q(1) / nab)
                    break
            else:
                raise AssertionError("no simple decomposition for root")


def irreducible(rs: RootSystem, lam, r: int = 0) -> ExplicitModule:
    """V(lam, r): the evaluation module at grade r; t acts by zero."""
    weights, mats = _irreducible_data(rs.label, tuple(lam))
    labels = [(w, r) for w in weights]
    action = {(k, 0): m for k, m in mats.items()}
    mod = ExplicitModule(rs, labels, action, (r, r), True, f"V({_wname(lam)},{r})")
    mod.marks["top"] = {0: ONE}
    return mod


def _wname(w) -> str:
    return ",".join(str(x) for x in w)


# ---------------------------------------------------------------------------
# induced modules and cyclic presentations


def induced(rs: RootSystem, lam, r: int, top: int) -> ExplicitModule:
    """P(lam, r) = U(g[t]) (x)_{U(g)} V(lam, r), truncated to grades <= top."""
    lam = tuple(lam)
    if top < r:
        raise ValueError("top grade below the generator grade")
    D = top - r
    env = _envelope(rs.label, D)
    vweights, vmats = _irreducible_data(rs.label, lam)
    vdim = len(vweights)
    index = {}
    labels = []
    for d in range(D + 1):
        for mono in env.monomials(d):
            mw = env.weight(mono)
            for v in range(vdim):
                index[(mono, v)] = len(labels)
                labels.append((tuple(a + b for a, b in zip(mw, vweights[v])), r + d))
    n = len(labels)
    action = {}
    for k in range(rs.dim):
        vm = vmats[k]
        cols0, cols1 = {}, {}
        for (mono, v), j in index.items():
            col = {}
            for m2, c in env.ad_degree_zero(k, mono).items():
                col[index[(m2, v)]] = col.get(index[(m2, v)], ZERO) + q(c)
            for v2, c in vm.col(v).items():
                t = index[(mono, v2)]
                col[t] = col.get(t, ZERO) + c
            col = {i: x for i, x in col.items() if x}
            if col:
                cols0[j] = col
            col = {}
            for m2, c in env.left_mul((1, k), mono).items():
                col[index[(m2, v)]] = q(c)
            if col:
                cols1[j] = col
        action[(k, 0)] = SMat(n, n, cols0)
        action[(k, 1)] = SMat(n, n, cols1)
    mod = ExplicitModule(rs, labels, action, (r, top), True, f"P({_wname(lam)},{r})")
    mod.marks["top"] = {index[((), 0)]: ONE}
    mod._pbw_index = index
    return mod


@lru_cache(maxsize=None)
def _envelope(label: str, D: int) -> TruncatedEnvelope:
    return TruncatedEnvelope(build_root_system(label), D)


@dataclass(frozen=True)
class CyclicPresentation:
    """A highest-weight generator (lam, r) with a named relation profile.

    kind: "P" (projective), "Delta" (local Weyl), "W" (global Weyl).
    top: the truncation grade b (relations U(g[t])[p] w = 0 for p > b - r).
    """

    kind: str
    lam: tuple
    r: int
    top: float = INF

    def __post_init__(self):
        if self.kind not in ("P", "Delta", "W"):
            raise ValueError(f"unknown presentation kind {self.kind!r}")


def relation_vectors(P: ExplicitModule, kind: str) -> list:
    rs = P.rs
    index = P._pbw_index
    D = P.window[1] - P.window[0]
    rels = []
    if kind == "P":
        return rels
    for deg in range(1, D + 1):
        for k in range(rs.npos):
            rels.append({index[(((deg, k),), 0)]: ONE})
        if kind == "Delta":
            for i in range(rs.rank):
                rels.append({index[(((deg, rs.h_index(i)),), 0)]: ONE})
    return rels


def build_cyclic(rs: RootSystem, pres: CyclicPresentation, window_top: int | None = None,
                 max_top: int | None = None) -> ExplicitModule:
    """Materialize a cyclic presentation inside a finite grade window.

    If the truncation grade is finite and inside the window the result is the
    exact truncated object.  Otherwise the window is doubled (up to max_top)
    until an empty grade slice certifies that nothing lives above it.
    """
    r = pres.r
    if window_top is None:
        window_top = pres.top if pres.top < INF else r + 2
    if max_top is None:
        max_top = max(window_top, r + 6)
    top = int(min(window_top, pres.top))
    while True:
        P = induced(rs, pres.lam, r, top)
        if pres.kind == "P":
            mod = P
            mod.name = f"P({_wname(pres.lam)},{r})"
        else:
            S = closure(P, relation_vectors(P, pres.kind))
            mod, proj = quotient(P, S)
            mod.marks["top"] = proj(P.marks["top"])
            mod.name = f"{pres.kind}({_wname(pres.lam)},{r})"
        present = set(mod.grades())
        gap = any(g not in present for g in range(r, top + 1))
        if pres.top <= top or gap:
            mod.certified = True
            mod.window = (r, top)
            return mod
        if top >= max_top:
            mod.certified = False
            mod.window = (r, top)
            return mod
        top = min(max_top, r + 2 * max(1, top - r))


# ---------------------------------------------------------------------------
# subspaces, submodules and quotients


def closure(M: ExplicitModule, vectors: list, gens=None) -> Echelon:
    """The submodule generated by `vectors`, as an echelon basis."""
    gens = gens or generating_set(M.rs)
    mats = [M.gen(*g) for g in gens]
    ech = Echelon()
    queue = []
    for v in vectors:
        r = ech.reduce(v)
        if r:
            ech.add(r)
            queue.append(r)
    while queue:
        v = queue.pop(0)
        for m in mats:
            w = m.apply(v)
            if not w:
                continue
            r = ech.reduce(w)
            if r:
                ech.add(r)
                queue.append(r)
    return ech


def quotient(M: ExplicitModule, S: Echelon):
    """M / S for a submodule S; returns (Q, projection on vectors)."""
    piv = set(S.rows)
    keep = [i for i in range(M.dim) if i not in piv]
    pos = {i: k for k, i in enumerate(keep)}

    def proj(v):
        r = S.reduce(v)
        return {pos[i]: x for i, x in r.items()}

    labels = [M.labels[i] for i in keep]
    action = {}
    for key, m in M.action.items():
        cols = {}
        for k, i in enumerate(keep):
            c = m.col(i)
            if c:
                img = proj(c)
                if img:
                    cols[k] = img
        action[key] = SMat(len(keep), len(keep), cols)
    Q = ExplicitModule(M.rs, labels, action, M.window, M.certified, M.name + "/S")
    for name, v in M.marks.items():
        Q.marks[name] = proj(v)
    return Q, proj


def submodule(M: ExplicitModule, S: Echelon):
    """The submodule S as a module; returns (module, inclusion matrix)."""
    piv = sorted(S.rows)
    basis = [S.rows[p] for p in piv]
    pos = {p: k for k, p in enumerate(piv)}
    n = len(piv)
    labels = [M.labels[p] for p in piv]
    action = {}
    for key, m in M.action.items():
        cols = {}
        for k, b in enumerate(basis):
            img = m.apply(b)
            if img:
                # in reduced echelon form the coordinates are the pivot entries
                coords = {pos[p]: x for p, x in img.items() if p in pos}
                cols[k] = coords
        action[key] = SMat(n, n, cols)
    incl = SMat(M.dim, n, {k: b for k, b in enumerate(basis)})
    sub = ExplicitModule(M.rs, labels, action, M.window, M.certified, "sub(" + M.name + ")")
    return sub, incl


def subquotient(M: ExplicitModule, big: Echelon, small: Echelon) -> ExplicitModule:
    sub, incl = submodule(M, big)
    piv = sorted(big.rows)
    pos = {p: k for k, p in enumerate(piv)}
    vecs = [{pos[p]: x for p, x in v.items() if p in pos} for v in small.basis()]
    inner = Echelon()
    for v in vecs:
        inner.add(v)
    Q, _ = quotient(sub, inner)
    return Q


def direct_sum(mods: list, name: str = "") -> tuple:
    """Direct sum; returns (module, list of offsets)."""
    rs = mods[0].rs
    labels, offsets = [], []
    for m in mods:
        offsets.append(len(labels))
        labels.extend(m.labels)
    n = len(labels)
    keys = set()
    for m in mods:
        keys.update(m.action)
    action = {}
    for key in sorted(keys):
        cols = {}
        for m, off in zip(mods, offsets):
            for j, c in m.gen(*key).cols.items():
                cols[off + j] = {off + i: x for i, x in c.items()}
        action[key] = SMat(n, n, cols)
    lo = min(m.window[0] for m in mods)
    hi = max(m.window[1] for m in mods)
    out = ExplicitModule(rs, labels, action, (lo, hi), all(m.certified for m in mods),
                         name or " + ".join(m.name for m in mods))
    return out, offsets


def truncate_module(M: ExplicitModule, gamma: TruncationSpec) -> ExplicitModule:
    """M_{>=a} / M_{>b}: keep the grades inside J."""
    keep = [i for i, (_, g) in enumerate(M.labels) if g in gamma]
    action = {key: m.reindex(keep, keep) for key, m in M.action.items()}
    lo = max(M.window[0], gamma.a)
    hi = min(M.window[1], gamma.b)
    out = ExplicitModule(M.rs, [M.labels[i] for i in keep], action, (lo, hi), M.certified,
                         f"{M.name}^{gamma.label()}")
    pos = {i: k for k, i in enumerate(keep)}
    for name, v in M.marks.items():
        out.marks[name] = {pos[i]: x for i, x in v.items() if i in pos}
    return out


def dual_module(M: ExplicitModule) -> ExplicitModule:
    """Graded dual: weights and grades negated, action by minus the transpose."""
    labels = [(tuple(-x for x in w), -g) for w, g in M.labels]
    action = {key: m.transpose().scale(-1) for key, m in M.action.items()}
    lo, hi = M.window
    return ExplicitModule(M.rs, labels, action, (-hi, -lo), M.certified, f"({M.name})*")


def graded_character_of(M: ExplicitModule) -> GradedCharacter:
    terms = {}
    for lab in M.labels:
        terms[lab] = terms.get(lab, 0) + 1
    lo, hi = M.window
    if terms:
        gs = [g for _, g in terms]
        lo, hi = min(lo, min(gs)), max(hi, max(gs))
    return GradedCharacter(terms, (lo, hi))


# ---------------------------------------------------------------------------
# morphisms


def hom_graded(M: ExplicitModule, N: ExplicitModule, gens=None) -> list:
    """Basis of degree-zero module maps M -> N, as SMat of shape (dim N, dim M)."""
    rs = M.rs
    gens = gens or generating_set(rs)
    mb, nb = M.blocks(), N.blocks()
    common = [k for k in mb if k in nb]
    var = {}
    for key in common:
        for j in mb[key]:
            for i in nb[key]:
                var[(i, j)] = len(var)
    if not var:
        return []
    eqs = {}
    for gen in gens:
        XM, XN = M.gen(*gen), N.gen(*gen)
        for key, js in mb.items():
            tgt = _label_shift(rs, key, gen)
            nt = nb.get(tgt)
            if not nt:
                continue
            ns = nb.get(key, [])
            for j in js:
                # (X_N phi)(e_j)
                for i in ns:
                    for i2, c in XN.col(i).items():
                        row = eqs.setdefault((gen, i2, j), {})
                        v = var[(i, j)]
                        row[v] = row.get(v, ZERO) + c
                # (phi X_M)(e_j)
                for j2, c in XM.col(j).items():
                    for i2 in nt:
                        row = eqs.setdefault((gen, i2, j), {})
                        v = var[(i2, j2)]
                        row[v] = row.get(v, ZERO) - c
    rows = [r for r in eqs.values() if any(r.values())]
    sols = nullspace(rows, len(var))
    inv = {v: ij for ij, v in var.items()}
    out = []
    for s in sols:
        cols = {}
        for v, x in s.items():
            i, j = inv[v]
            cols.setdefault(j, {})[i] = x
        out.append(SMat(N.dim, M.dim, cols))
    return out


def is_module_map(M: ExplicitModule, N: ExplicitModule, phi: SMat, gens=None) -> bool:
    for gen in gens or all_generators(M.rs):
        if not (N.gen(*gen) @ phi - phi @ M.gen(*gen)).is_zero():
            return False
    for j, col in phi.cols.items():
        for i in col:
            if N.labels[i] != M.labels[j]:
                return False
    return True


def map_from_generators(M: ExplicitModule, sources: list, N: ExplicitModule, images: list) -> SMat:
    """The module map M -> N sending each source vector to the given image.

    M must be generated by `sources`; consistency of the images is checked.
    """
    gens = generating_set(M.rs)
    ech = Echelon(track_payload=True)
    queue = []
    for v, w in zip(sources, images):
        r, pl = ech.reduce(v, w)
        if r:
            ech.add(r, pl)
            queue.append((r, pl))
        elif pl:
            raise ValueError("inconsistent images: not a module map")
    while queue:
        v, w = queue.pop(0)
        for gen in gens:
            XM, XN = M.gen(*gen), N.gen(*gen)
            v2 = XM.apply(v)
            w2 = XN.apply(w)
            r, pl = ech.reduce(v2, w2)
            if r:
                ech.add(r, pl)
                queue.append((r, pl))
            elif pl:
                raise ValueError("inconsistent images: not a module map")
    if len(ech) != M.dim:
        raise ValueError("sources do not generate the module")
    cols = {p: ech.payload[p] for p in ech.rows if ech.payload[p]}
    return SMat(N.dim, M.dim, cols)


def kernel(phi: SMat, M: ExplicitModule) -> Echelon:
    """Kernel of a graded map out of M, computed block by block."""
    ech = Echelon()
    for key, js in M.blocks().items():
        rows = {}
        for k, j in enumerate(js):
            for i, x in phi.col(j).items():
                rows.setdefault(i, {})[k] = x
        for v in nullspace(list(rows.values()), len(js)):
            ech.add({js[k]: x for k, x in v.items()})
    return ech


def image(phi: SMat, N: ExplicitModule) -> Echelon:
    ech = Echelon()
    for j in sorted(phi.cols):
        ech.add(phi.cols[j])
    return ech


def is_isomorphic(M: ExplicitModule, N: ExplicitModule) -> bool:
    """Decide M ~ N: equal characters and an invertible map in Hom(M, N)."""
    if graded_character_of(M).terms != graded_character_of(N).terms:
        return False
    homs = hom_graded(M, N)
    if not homs:
        return M.dim == 0
    # a generic combination is invertible iff some combination is; try a
    # deterministic sequence of combinations
    for trial in range(1, 2 * len(homs) + 3):
        phi = SMat.zero(N.dim, M.dim)
        for k, h in enumerate(homs):
            phi = phi + h.scale(q((k + 1) ** trial % 97 + 1))
        if len(kernel(phi, M)) == 0:
            return True
    return False


# ---------------------------------------------------------------------------
# tops, projective covers and Ext^1


def radical_span(M: ExplicitModule) -> Echelon:
    """g[t]_+ M, the span of all degree-one images."""
    ech = Echelon()
    for k in range(M.rs.dim):
        X = M.gen(k, 1)
        for j in sorted(X.cols):
            ech.add(X.cols[j])
    return ech


def top_generators(M: ExplicitModule) -> list:
    """Highest-weight vectors spanning the head M / g[t]_+ M, as (vector, weight, grade)."""
    rs = M.rs
    rad = radical_span(M)
    e_mats = [M.gen(rs.simple_index(i, +1), 0) for i in range(rs.rank)]
    out = []
    for key in sorted(M.blocks(), key=lambda k: (k[1], rs.dominant_key(k[0]))):
        w, g = key
        if not rs.is_dominant(w):
            continue
        js = M.blocks()[key]
        rows = {}
        for k, j in enumerate(js):
            for E in e_mats:
                r = rad.reduce(E.col(j))
                for i, x in r.items():
                    rows.setdefault((id(E), i), {})[k] = x
        found = Echelon()
        for v in nullspace(list(rows.values()), len(js)):
            vec = {js[k]: x for k, x in v.items()}
            red = rad.reduce(vec)
            if red and found.add(red):
                out.append((vec, w, g))
    return out


@dataclass
class Presentation:
    """0 -> K -> P -> M -> 0 with P a sum of truncated projectives."""

    M: ExplicitModule
    P: ExplicitModule
    phi: SMat                 # P -> M
    K: ExplicitModule
    incl: SMat                # K -> P
    tops: list                # (weight, grade) of the summands


def projective_presentation(M: ExplicitModule, top: int | None = None) -> Presentation:
    rs = M.rs
    if top is None:
        top = max(M.grades()) if M.dim else 0
    gens = top_generators(M)
    parts = [induced(rs, w, g, max(top, g)) for _, w, g in gens]
    if not parts:
        raise ValueError("cannot present the zero module")
    P, offs = direct_sum(parts, "cover")
    sources = [{off + i: x for i, x in p.marks["top"].items()} for p, off in zip(parts, offs)]
    phi = map_from_generators(P, sources, M, [v for v, _, _ in gens])
    K_ech = kernel(phi, P)
    K, incl = submodule(P, K_ech)
    return Presentation(M, P, phi, K, incl, [(w, g) for _, w, g in gens])


@dataclass
class Ext1Result:
    dim: int
    cocycles: list            # SMat K -> N, representatives of a basis
    presentation: Presentation
    N: ExplicitModule


def _flatten(m: SMat) -> dict:
    return {j * m.nrows + i: x for i, j, x in m.entries()}


def ext1(M: ExplicitModule, N: ExplicitModule, gamma: TruncationSpec | None = None,
         presentation: Presentation | None = None) -> Ext1Result:
    """Ext^1(M, N) as the cokernel of Hom(P, N) -> Hom(K, N)."""
    if gamma is not None:
        for _, g in list(M.labels) + list(N.labels):
            if g not in gamma:
                raise ValueError(f"grade {g} lies outside the truncation {gamma.label()}")
    if M.dim == 0 or N.dim == 0:
        return Ext1Result(0, [], presentation, N)
    top = max(max(M.grades()), max(N.grades()))
    pres = presentation
    if pres is None or max(pres.P.grades()) < top:
        pres = projective_presentation(M, top)
    homK = hom_graded(pres.K, N)
    if not homK:
        return Ext1Result(0, [], pres, N)
    homP = hom_graded(pres.P, N)
    ech = Echelon()
    for h in homP:
        ech.add(_flatten(h @ pres.incl))
    base = len(ech)
    cocycles = []
    for h in homK:
        if ech.add(_flatten(h)):
            cocycles.append(h)
    assert len(ech) == base + len(cocycles)
    return Ext1Result(len(cocycles), cocycles, pres, N)


@dataclass
class Extension:
    E: ExplicitModule
    inj: SMat      # N -> E
    surj: SMat     # E -> M


def extension_from_cocycle(ext: Ext1Result, cocycle: SMat | None = None) -> Extension:
    """The pushout 0 -> N -> E -> M -> 0 of the presentation along a cocycle K -> N."""
    pres, N = ext.presentation, ext.N
    if cocycle is None:
        cocycle = SMat.zero(N.dim, pres.K.dim)
    S, (op, on) = direct_sum([pres.P, N], "pushout")
    graph = []
    for j in range(pres.K.dim):
        v = dict(pres.incl.col(j))
        for i, x in cocycle.col(j).items():
            v[on + i] = -x
        graph.append(v)
    G = closure(S, graph)
    assert len(G) == pres.K.dim
    E, proj = quotient(S, G)
    inj = SMat(E.dim, N.dim, {i: proj({on + i: ONE}) for i in range(N.dim)})
    keep = [i for i in range(S.dim) if i not in G.rows]
    cols = {}
    for k, i in enumerate(keep):
        if i < on:
            c = pres.phi.col(i)
            if c:
                cols[k] = c
    surj = SMat(pres.M.dim, E.dim, cols)
    for name, v in N.marks.items():
        E.marks[name] = inj.apply(v)
    E.name = f"Ext({pres.M.name},{N.name})"
    E.certified = pres.M.certified and N.certified
    return Extension(E, inj, surj)


def has_section(ext: Extension, M: ExplicitModule) -> bool:
    """Whether E -> M splits, i.e. some s: M -> E has surj o s = id."""
    homs = hom_graded(M, ext.E)
    ident = _flatten(SMat.identity(M.dim))
    basis = [_flatten(ext.surj @ h) for h in homs]
    from tiltcat.linalg import solve_combination
    return solve_combination(basis, ident) is not None


def universal_extension(M: ExplicitModule, N: ExplicitModule, gamma: TruncationSpec | None = None,
                        check_self_ext: bool = True):
    """Extend N by copies of M until Ext^1(M, U) = 0; returns (U, d)."""
    pres = projective_presentation(M, max(max(M.grades()), max(N.grades())))
    if check_self_ext:
        if ext1(M, M, None, pres).dim:
            raise ValueError("Ext^1(M, M) is nonzero; the universal extension is not defined")
    e = ext1(M, N, None, pres)
    bound = e.dim
    U, d = N, 0
    while e.dim:
        U = extension_from_cocycle(e, e.cocycles[0]).E
        d += 1
        if d > bound:
            raise RuntimeError("universal extension did not terminate within dim Ext^1(M, N)")
        e = ext1(M, U, None, pres)
    return U, d


# ---------------------------------------------------------------------------
# endomorphisms, summands, socles and filtrations


@dataclass
class EndAnalysis:
    end_dim: int
    rad_dim: int

    @property
    def indecomposable(self) -> bool:
        return self.end_dim - self.rad_dim == 1


def end_algebra_analysis(M: ExplicitModule) -> EndAnalysis:
    """End(M) and its radical via the kernel of the trace form (characteristic zero)."""
    H = hom_graded(M, M)
    n = len(H)
    gram = []
    for a in range(n):
        row = {}
        for b in range(n):
            t = (H[a] @ H[b]).trace()
            if t:
                row[b] = t
        gram.append(row)
    rad = nullspace(gram, n)
    return EndAnalysis(n, len(rad))


def split_off_summands(U: ExplicitModule, D: ExplicitModule, keep: str = "top"):
    """Remove the maximal direct summand isomorphic to a power of the cyclic module D.

    End(D) must be one-dimensional.  Returns (complement, d); the complement
    carries the projection of U's marks.
    """
    homs_in = hom_graded(D, U)
    homs_out = hom_graded(U, D)
    if not homs_in or not homs_out:
        return U, 0
    gvec = D.marks["top"]
    gi = min(gvec)
    pair = []
    for pi in homs_out:
        row = []
        for io in homs_in:
            img = (pi @ io).apply(gvec)
            row.append(img.get(gi, ZERO) / gvec[gi])
        pair.append(row)
    # choose a maximal invertible minor greedily
    chosen_in, chosen_out = [], []
    ech = Echelon()
    for a, row in enumerate(pair):
        if ech.add({b: x for b, x in enumerate(row) if x}):
            chosen_out.append(a)
    d = len(chosen_out)
    if d == 0:
        return U, 0
    cols = Echelon()
    for b in range(len(homs_in)):
        if cols.add({a: pair[a][b] for a in chosen_out if pair[a][b]}):
            chosen_in.append(b)
        if len(chosen_in) == d:
            break
    C = [[pair[a][b] for b in chosen_in] for a in chosen_out]
    Cinv = _invert(C)
    # pi'_k = sum_a Cinv[k][a] pi_a satisfies pi'_k iota_l = delta_kl
    pis = []
    for k in range(d):
        m = SMat.zero(D.dim, U.dim)
        for a_pos, a in enumerate(chosen_out):
            if Cinv[k][a_pos]:
                m = m + homs_out[a].scale(Cinv[k][a_pos])
        pis.append(m)
    ios = [homs_in[b] for b in chosen_in]
    e = SMat.zero(U.dim, U.dim)
    for io, pi in zip(ios, pis):
        e = e + io @ pi
    comp = SMat.identity(U.dim) - e
    ker = image(comp, U)
    sub, incl = submodule(U, ker)
    piv = sorted(ker.rows)
    pos = {p: k for k, p in enumerate(piv)}
    for name, v in U.marks.items():
        w = comp.apply(v)
        sub.marks[name] = {pos[p]: x for p, x in w.items() if p in pos}
    sub.name = U.name
    sub.window = U.window
    return sub, d


def _invert(C):
    n = len(C)
    a = [[q(x) for x in row] + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(C)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def socle_space(M: ExplicitModule) -> Echelon:
    """Joint kernel of the degree-one generators: the socle of M."""
    ech = Echelon()
    mats = [M.gen(k, 1) for k in range(M.rs.dim)]
    for key, js in M.blocks().items():
        rows = {}
        for k, j in enumerate(js):
            for t, X in enumerate(mats):
                for i, x in X.col(j).items():
                    rows.setdefault((t, i), {})[k] = x
        for v in nullspace(list(rows.values()), len(js)):
            ech.add({js[k]: x for k, x in v.items()})
    return ech


def socle_of(M: ExplicitModule) -> dict:
    """Simple multiplicities {(weight, grade): m} of the socle."""
    S = socle_space(M)
    terms = {}
    for v in S.basis():
        lab = M.labels[min(v)]
        terms[lab] = terms.get(lab, 0) + 1
    from tiltcat.charring import simple_decompose
    return simple_decompose(M.rs, GradedCharacter(terms))


def largest_submodule_in(M: ExplicitModule, allowed) -> Echelon:
    """Greatest submodule contained in the span of basis vectors whose label is allowed."""
    gens = generating_set(M.rs)
    blocks = M.blocks()
    space = {key: [{j: ONE} for j in js] for key, js in blocks.items() if allowed(key)}
    changed = True
    while changed:
        changed = False
        echs = {}
        for key, vs in space.items():
            e = Echelon()
            for v in vs:
                e.add(v)
            echs[key] = e
        for key in sorted(space, key=lambda k: (k[1], k[0])):
            vs = space[key]
            if not vs:
                continue
            rows = {}
            for k, v in enumerate(vs):
                for t, gen in enumerate(gens):
                    img = M.gen(*gen).apply(v)
                    if not img:
                        continue
                    tgt = _label_shift(M.rs, key, gen)
                    e = echs.get(tgt)
                    r = e.reduce(img) if e is not None else img
                    for i, x in r.items():
                        rows.setdefault((t, i), {})[k] = x
            if not rows:
                continue
            sols = nullspace(list(rows.values()), len(vs))
            if len(sols) < len(vs):
                new = []
                for s in sols:
                    acc = {}
                    for k, c in s.items():
                        acc = vadd(acc, vs[k], c)
                    new.append(acc)
                space[key] = new
                changed = True
    out = Echelon()
    for key in sorted(space, key=lambda k: (k[1], k[0])):
        for v in space[key]:
            out.add(v)
    return out


@dataclass
class FiltrationStep:
    index: int
    weight: tuple
    dim: int
    quotient_character: GradedCharacter
    quotient_socle: dict


def o_canonical_filtration(M: ExplicitModule, enumeration: list) -> list:
    """Chain M_0 <= M_1 <= ... with M_s the largest submodule with weights in
    the union of conv(W lam_r) for r <= s."""
    rs = M.rs
    steps = []
    prev = Echelon()
    for s, lam in enumerate(enumeration):
        cone = [tuple(l) for l in enumeration[: s + 1]]
        Ms = largest_submodule_in(M, lambda key, cone=cone: any(rs.hull_membership(key[0], l) for l in cone))
        Q = subquotient(M, Ms, prev)
        steps.append(FiltrationStep(s, tuple(lam), len(Ms), graded_character_of(Q), socle_of(Q) if Q.dim else {}))
        prev = Ms
    return steps


def filtration_condition_holds(steps: list) -> bool:
    """Hom(V(mu, r), M_s / M_{s-1}) != 0 only for mu = lam_s."""
    return all(w == st.weight for st in steps for (w, _) in st.quotient_socle)


# ---------------------------------------------------------------------------
# soundness checks


def _bracket_action(M, coeffs: dict, d: int) -> SMat:
    out = SMat.zero(M.dim, M.dim)
    for k, c in coeffs.items():
        out = out + M.gen(k, d).scale(c)
    return out


def degree_two_action(M: ExplicitModule, k: int) -> SMat:
    """Action of (basis element k) (x) t^2, derived from degree-one generators."""
    rs = M.rs
    nr = len(rs.roots)
    if k < nr:
        w = rs.root_weights[k]
        i = next(i for i in range(rs.rank) if w[i])
        H = M.gen(rs.h_index(i), 1)
        X = M.gen(k, 1)
        return (H @ X - X @ H).scale(q(1) / w[i])
    i = k - nr
    e, f = M.gen(rs.simple_index(i, +1), 1), M.gen(rs.simple_index(i, -1), 1)
    return e @ f - f @ e


def bracket_violations(M: ExplicitModule) -> list:
    """Pairs of generators whose commutator disagrees with the structure constants."""
    rs = M.rs
    bad = []
    n = rs.dim
    for a in range(n):
        for b in range(n):
            for da, db in ((0, 0), (0, 1)):
                if da == db == 0 and b < a:
                    continue
                Xa, Xb = M.gen(a, da), M.gen(b, db)
                lhs = Xa @ Xb - Xb @ Xa
                rhs = _bracket_action(M, rs.bracket(a, b), da + db)
                if lhs != rhs:
                    bad.append(((a, da), (b, db)))
    if max(M.grades(), default=0) - min(M.grades(), default=0) >= 2:
        deg2 = {k: degree_two_action(M, k) for k in range(n)}
        for a in range(n):
            for b in range(a + 1, n):
                Xa, Xb = M.gen(a, 1), M.gen(b, 1)
                lhs = Xa @ Xb - Xb @ Xa
                rhs = SMat.zero(M.dim, M.dim)
                for k, c in rs.bracket(a, b).items():
                    rhs = rhs + deg2[k].scale(c)
                if lhs != rhs:
                    bad.append(((a, 1), (b, 1)))
            for b in range(n):
                Xa = M.gen(a, 0)
                lhs = Xa @ deg2[b] - deg2[b] @ Xa
                rhs = SMat.zero(M.dim, M.dim)
                for k, c in rs.bracket(a, b).items():
                    rhs = rhs + deg2[k].scale(c)
                if lhs != rhs:
                    bad.append(((a, 0), (b, 2)))
    return bad


def weight_grade_violations(M: ExplicitModule) -> list:
    """Matrix entries that do not respect the weight and degree of their generator."""
    bad = []
    for gen, X in M.action.items():
        for i, j, _ in X.entries():
            if M.labels[i] != _label_shift(M.rs, M.labels[j], gen):
                bad.append((gen, i, j))
    return bad


def to_record(M: ExplicitModule) -> dict:
    """Serializable form: labels plus sparse matrices as [row, col, num, den]."""
    acts = []
    for (k, d) in sorted(M.action):
        ent = [[i, j, int(x.numerator), int(x.denominator)] for i, j, x in M.action[(k, d)].entries()]
        acts.append({"generator": M.rs.basis_name(k), "degree": d, "entries": ent})
    return {
        "algebra": M.rs.label,
        "name": M.name,
        "certified": M.certified,
        "labels": [{"weight": list(w), "grade": g} for w, g in M.labels],
        "action": acts,
    }


def from_record(rec: dict) -> ExplicitModule:
    rs = build_root_system(rec["algebra"])
    names = {rs.basis_name(k): k for k in range(rs.dim)}
    labels = [(tuple(l["weight"]), l["grade"]) for l in rec["labels"]]
    n = len(labels)
    action = {}
    for a in rec["action"]:
        cols = {}
        for i, j, num, den in a["entries"]:
            cols.setdefault(j, {})[i] = q(num) / q(den)
        action[(names[a["generator"]], a["degree"])] = SMat(n, n, cols)
    grades = [g for _, g in labels] or [0]
    return ExplicitModule(rs, labels, action, (min(grades), max(grades)), rec["certified"], rec["name"])
