"""Root systems, Chevalley bases and characters of finite-dimensional g-modules.

Weights are integer tuples in the fundamental-weight basis.  Roots are also
kept in simple-root coordinates, which is where the structure constants are
computed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates

_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    # alpha_1 short, alpha_2 long; entry [i][j] = <alpha_j, alpha_i^vee>
    "C2": ((2, -2), (-1, 2)),
}


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    label: str
    rank: int
    cartan: tuple

    def __post_init__(self):
        m = self.cartan
        if len(m) != self.rank or any(len(row) != self.rank for row in m):
            raise ValueError("cartan matrix has the wrong shape")
        for i in range(self.rank):
            if m[i][i] != 2:
                raise ValueError("cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and m[i][j] > 0:
                    raise ValueError("cartan off-diagonal entries must be <= 0")

    @classmethod
    def of(cls, label: str) -> "CartanDatum":
        if label not in _CARTAN:
            raise UnsupportedType(f"unsupported type {label!r}; expected one of {sorted(_CARTAN)}")
        m = _CARTAN[label]
        return cls(label, len(m), m)


def _inverse(m):
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def _symmetrizer(m):
    # d_i with d_i m[i][j] = d_j m[j][i]; smallest entry 1
    n = len(m)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and m[i][j] != 0 and d[j] is None:
                d[j] = d[i] * m[i][j] / m[j][i]
                stack.append(j)
    lo = min(d)
    return tuple(x / lo for x in d)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _scale(k, a):
    return tuple(k * x for x in a)


@dataclass
class RootSystem:
    """Root data and Chevalley basis for one simple Lie algebra.

    The Lie algebra basis is indexed as: positive root vectors, negative root
    vectors (same order), then h_1..h_l.
    """

    datum: CartanDatum
    pos_roots: list = field(default_factory=list)      # simple-root coordinates
    roots: list = field(default_factory=list)          # positives then negatives
    root_weights: list = field(default_factory=list)   # fundamental-weight coordinates
    structure: dict = field(default_factory=dict)      # (a, b) -> N_{a,b}, root indices
    coroots: list = field(default_factory=list)        # h_alpha in the h_i basis

    @property
    def label(self) -> str:
        return self.datum.label

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def cartan(self):
        return self.datum.cartan

    @property
    def npos(self) -> int:
        return len(self.pos_roots)

    @property
    def dim(self) -> int:
        return 2 * self.npos + self.rank

    # ----- coordinates -------------------------------------------------

    def to_root_coords(self, wt) -> tuple:
        inv = self._cartan_inv
        return tuple(sum(inv[i][j] * wt[j] for j in range(self.rank)) for i in range(self.rank))

    def to_weight_coords(self, rc) -> tuple:
        m = self.cartan
        out = tuple(sum(m[i][j] * rc[j] for j in range(self.rank)) for i in range(self.rank))
        return tuple(int(x) for x in out)

    def inner(self, a, b) -> Fraction:
        """Invariant form on weights given in fundamental-weight coordinates."""
        n = self.to_root_coords(b)
        return sum((Fraction(a[i]) * self._sym[i] * n[i] for i in range(self.rank)), Fraction(0))

    def _root_inner(self, a, b) -> Fraction:
        # a, b in simple-root coordinates
        m, d = self.cartan, self._sym
        return sum((d[i] * m[i][j] * a[i] * b[j] for i in range(self.rank) for j in range(self.rank)),
                   Fraction(0))

    def height(self, wt) -> Fraction:
        return sum(self.to_root_coords(wt), Fraction(0))

    @property
    def zero(self) -> tuple:
        return (0,) * self.rank

    @property
    def rho(self) -> tuple:
        return (1,) * self.rank

    def simple_root(self, i: int) -> tuple:
        return tuple(self.cartan[j][i] for j in range(self.rank))

    @property
    def theta(self) -> tuple:
        return self.root_weights[self.npos - 1]

    def root_index(self, wt) -> int:
        return self._root_lookup[tuple(wt)]

    def is_root(self, wt) -> bool:
        return tuple(wt) in self._root_lookup

    # ----- Lie algebra -------------------------------------------------

    def basis_weight(self, k: int) -> tuple:
        if k < len(self.roots):
            return self.root_weights[k]
        return self.zero

    def bracket(self, a: int, b: int) -> dict:
        """[b_a, b_b] in the Chevalley basis as {index: int}."""
        nr = len(self.roots)
        if a >= nr and b >= nr:
            return {}
        if a >= nr:
            i = a - nr
            c = self.root_weights[b][i]
            return {b: c} if c else {}
        if b >= nr:
            out = self.bracket(b, a)
            return {k: -v for k, v in out.items()}
        ra, rb = self.roots[a], self.roots[b]
        s = _add(ra, rb)
        if not any(s):
            return {nr + i: c for i, c in enumerate(self.coroots[a]) if c}
        if s in self._rc_lookup:
            return {self._rc_lookup[s]: self.structure[(a, b)]}
        return {}

    def simple_index(self, i: int, sign: int = 1) -> int:
        # basis index of x_{alpha_i}^{+} or x_{alpha_i}^{-}
        k = self._rc_lookup[tuple(int(j == i) for j in range(self.rank))]
        return k if sign > 0 else k + self.npos

    def h_index(self, i: int) -> int:
        return len(self.roots) + i

    def basis_name(self, k: int) -> str:
        if k >= len(self.roots):
            return f"h{k - len(self.roots) + 1}"
        rc = self.roots[k]
        sign = "+" if k < self.npos else "-"
        coeff = "".join(str(abs(c)) for c in rc)
        return f"x{sign}[{coeff}]"

    # ----- weights and Weyl group -------------------------------------

    def reflect(self, wt, i: int) -> tuple:
        return _sub(tuple(wt), _scale(wt[i], self.simple_root(i)))

    def dominant_rep(self, wt) -> tuple:
        wt = tuple(wt)
        while True:
            for i, c in enumerate(wt):
                if c < 0:
                    wt = self.reflect(wt, i)
                    break
            else:
                return wt

    def antidominant_rep(self, wt) -> tuple:
        wt = tuple(wt)
        while True:
            for i, c in enumerate(wt):
                if c > 0:
                    wt = self.reflect(wt, i)
                    break
            else:
                return wt

    def w0(self, wt) -> tuple:
        """Action of the longest Weyl group element."""
        return _neg(self.dual_weight(wt))

    def dual_weight(self, wt) -> tuple:
        """-w0(wt); the highest weight of V(wt)^* when wt is dominant."""
        perm = self._w0_perm
        return tuple(wt[perm[i]] for i in range(self.rank))

    def in_root_lattice(self, wt) -> bool:
        return all(x.denominator == 1 for x in self.to_root_coords(wt))

    def dominance_leq(self, mu, lam) -> bool:
        """mu <= lam, i.e. lam - mu is a non-negative integer combination of simple roots."""
        diff = self.to_root_coords(_sub(tuple(lam), tuple(mu)))
        return all(x.denominator == 1 and x >= 0 for x in diff)

    def hull_membership(self, mu, lam) -> bool:
        """mu lies in the convex hull of the Weyl orbit of the dominant weight lam."""
        if not self.in_root_lattice(_sub(tuple(lam), tuple(mu))):
            return False
        return self.dominance_leq(self.dominant_rep(mu), lam)

    def is_dominant(self, wt) -> bool:
        return all(c >= 0 for c in wt)

    def weyl_dimension(self, lam) -> int:
        num, den = Fraction(1), Fraction(1)
        for k in range(self.npos):
            c = self.coroots[k]
            num *= sum((lam[i] + 1) * c[i] for i in range(self.rank))
            den *= sum(c)
        out = num / den
        assert out.denominator == 1
        return int(out)

    def weyl_character(self, lam) -> dict:
        return dict(_weyl_character(self.label, tuple(lam)))

    def orbit(self, wt) -> list:
        seen = {tuple(wt)}
        todo = [tuple(wt)]
        while todo:
            w = todo.pop()
            for i in range(self.rank):
                v = self.reflect(w, i)
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return sorted(seen)

    def adjoint_character(self) -> dict:
        out = {self.zero: self.rank}
        for w in self.root_weights:
            out[w] = out.get(w, 0) + 1
        return out

    def tensor_characters(self, a: dict, b: dict) -> dict:
        out = {}
        for wa, ma in a.items():
            for wb, mb in b.items():
                w = _add(wa, wb)
                out[w] = out.get(w, 0) + ma * mb
        return {w: m for w, m in out.items() if m}

    def decompose(self, ch: dict) -> dict:
        """Strip highest weights; returns {dominant weight: multiplicity}.

        Raises ValueError when the input is not the character of a module.
        """
        rest = {w: m for w, m in ch.items() if m}
        out = {}
        while rest:
            top = max(rest, key=lambda w: (self.height(w), w))
            m = rest[top]
            if m < 0 or not self.is_dominant(top):
                raise ValueError("not the character of a g-module")
            out[top] = m
            for w, k in self.weyl_character(top).items():
                v = rest.get(w, 0) - m * k
                if v:
                    rest[w] = v
                else:
                    rest.pop(w, None)
        return out

    def hom_to_adjoint_tensor(self, lam, mu) -> int:
        """Multiplicity of V(lam) in g (x) V(mu)."""
        ch = self.tensor_characters(self.adjoint_character(), self.weyl_character(mu))
        return self.decompose(ch).get(tuple(lam), 0)

    def dominant_key(self, wt):
        return (self.height(wt), tuple(wt))

    def enumerate_dominant(self, count: int) -> list:
        """First `count` dominant weights ordered by (height, lex)."""
        if count <= 0:
            return []
        hts = [self.height(self._fundamental(i)) for i in range(self.rank)]
        bound = Fraction(1)
        while True:
            box = [range(int(bound / h) + 1) for h in hts]
            found = [w for w in product(*box) if self.height(w) <= bound]
            if len(found) >= count:
                found.sort(key=self.dominant_key)
                return [tuple(w) for w in found[:count]]
            bound *= 2

    def dominant_below(self, cap) -> list:
        """Dominant weights mu <= cap, in enumeration order."""
        hts = [self.height(self._fundamental(i)) for i in range(self.rank)]
        hc = self.height(cap)
        box = [range(int(hc / h) + 1) for h in hts]
        out = [tuple(w) for w in product(*box) if self.dominance_leq(w, cap)]
        out.sort(key=self.dominant_key)
        return out

    def window_weights(self, cap) -> list:
        """Dominant weights in the real convex hull of W cap (every lattice coset)."""
        hts = [self.height(self._fundamental(i)) for i in range(self.rank)]
        hc = self.height(cap)
        box = [range(int(hc / h) + 1) for h in hts]
        out = []
        for w in product(*box):
            diff = tuple(a - b for a, b in zip(cap, w))
            if all(x >= 0 for x in self.to_root_coords(diff)):
                out.append(tuple(w))
        out.sort(key=self.dominant_key)
        return out

    def _fundamental(self, i: int) -> tuple:
        return tuple(int(j == i) for j in range(self.rank))

    # ----- checks -----------------------------------------------------

    def jacobi_violations(self) -> list:
        """Triples of basis indices for which the Jacobi identity fails."""
        bad = []
        n = self.dim
        br = self.bracket

        def lin(coeffs, b):
            out = {}
            for k, c in coeffs.items():
                for kk, cc in br(k, b).items():
                    out[kk] = out.get(kk, 0) + c * cc
            return out

        for a in range(n):
            for b in range(a + 1, n):
                ab = br(a, b)
                for c in range(b + 1, n):
                    tot = {}
                    for part in (lin(ab, c), lin(br(b, c), a), lin(br(c, a), b)):
                        for k, v in part.items():
                            tot[k] = tot.get(k, 0) + v
                    if any(tot.values()):
                        bad.append((a, b, c))
        return bad


def _p_value(rs_lookup, a, b):
    p = 0
    while _sub(b, _scale(p + 1, a)) in rs_lookup:
        p += 1
    return p


@lru_cache(maxsize=None)
def build_root_system(label_or_datum) -> RootSystem:
    """Root system tables for a supported Cartan type label (or CartanDatum)."""
    datum = label_or_datum if isinstance(label_or_datum, CartanDatum) else CartanDatum.of(label_or_datum)
    if datum.cartan != _CARTAN.get(datum.label):
        raise UnsupportedType(f"unsupported Cartan datum {datum!r}")
    rs = RootSystem(datum)
    n = datum.rank
    m = datum.cartan
    rs._cartan_inv = _inverse(m)
    rs._sym = _symmetrizer(m)

    # positive roots by simple-root strings
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for r in layer:
            wt = rs.to_weight_coords(r)
            for i in range(n):
                # alpha_i string through r: r - p a_i .. r + q a_i, q - p = -<r, a_i^vee>
                p = 0
                while _sub(r, _scale(p + 1, simple[i])) in found:
                    p += 1
                q = p - wt[i]
                if q > 0:
                    s = _add(r, simple[i])
                    if s not in found:
                        found.add(s)
                        nxt.append(s)
        layer = nxt
    pos = sorted(found, key=lambda r: (sum(r), tuple(-x for x in r)))
    rs.pos_roots = pos
    rs.roots = pos + [_neg(r) for r in pos]
    rs.root_weights = [rs.to_weight_coords(r) for r in rs.roots]
    rs._rc_lookup = {r: k for k, r in enumerate(rs.roots)}
    rs._root_lookup = {w: k for k, w in enumerate(rs.root_weights)}
    order = {r: k for k, r in enumerate(pos)}

    d = rs._sym
    coroots = []
    for r in rs.roots:
        norm = rs._root_inner(r, r) / 2
        c = tuple(r[i] * d[i] / norm for i in range(n))
        assert all(x.denominator == 1 for x in c)
        coroots.append(tuple(int(x) for x in c))
    rs.coroots = coroots

    # extraspecial pairs
    extra = {}
    for xi in pos:
        for a in pos:
            b = _sub(xi, a)
            if b in order and order[a] < order[b]:
                extra[xi] = (a, b)
                break

    def ip(a, b):
        return rs._root_inner(a, b)

    memo = {}

    def N(a, b):
        key = (a, b)
        if key in memo:
            return memo[key]
        s = _add(a, b)
        apos, bpos = sum(a) > 0, sum(b) > 0
        if apos and bpos:
            if order[a] > order[b]:
                val = -N(b, a)
            else:
                g, dlt = extra[s]
                if (a, b) == (g, dlt):
                    val = Fraction(_p_value(found, a, b) + 1)
                else:
                    t = Fraction(0)
                    bg, ag = _sub(b, g), _sub(a, g)
                    if bg in rs._rc_lookup:
                        t += N(b, _neg(g)) * N(a, _neg(dlt)) / ip(bg, bg)
                    if ag in rs._rc_lookup:
                        t += N(_neg(g), a) * N(b, _neg(dlt)) / ip(ag, ag)
                    val = ip(s, s) / N(g, dlt) * t
        elif not apos and not bpos:
            val = -N(_neg(a), _neg(b))
        else:
            c = _neg(s)
            if (sum(c) > 0) == apos:
                val = ip(c, c) / ip(b, b) * N(c, a)
            else:
                val = ip(c, c) / ip(a, a) * N(b, c)
        memo[key] = val
        return val

    for i, ra in enumerate(rs.roots):
        for j, rb in enumerate(rs.roots):
            s = _add(ra, rb)
            if s in rs._rc_lookup:
                v = N(ra, rb)
                assert v.denominator == 1
                rs.structure[(i, j)] = int(v)

    # -w0 as a coordinate permutation
    perm = []
    for i in range(n):
        img = _neg(rs.antidominant_rep(rs._fundamental(i)))
        perm.append(img.index(1))
    inv = [0] * n
    for i, j in enumerate(perm):
        inv[j] = i
    rs._w0_perm = tuple(inv)
    return rs


@lru_cache(maxsize=None)
def _weyl_character(label: str, lam: tuple) -> tuple:
    rs = build_root_system(label)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    lr = _add(lam, rs.rho)
    top = rs.inner(lr, lr)
    mult = {lam: 1}
    layer = [lam]
    simple = [rs.simple_root(i) for i in range(rs.rank)]
    pos_w = rs.root_weights[: rs.npos]
    while layer:
        cand = sorted({_sub(w, a) for w in layer for a in simple})
        nxt = []
        for mu in cand:
            if mu in mult or not rs.hull_membership(mu, lam):
                continue
            acc = Fraction(0)
            for a in pos_w:
                k = 1
                while True:
                    v = _add(mu, _scale(k, a))
                    if not rs.hull_membership(v, lam):
                        break
                    acc += rs.inner(v, a) * mult[v]
                    k += 1
            mr = _add(mu, rs.rho)
            val = 2 * acc / (top - rs.inner(mr, mr))
            assert val.denominator == 1, "Freudenthal recursion produced a non-integer"
            if val:
                mult[mu] = int(val)
                nxt.append(mu)
        layer = nxt
    return tuple(sorted(mult.items()))
