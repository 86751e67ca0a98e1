"""Exact sparse linear algebra over the rationals.

Vectors are dicts {index: QQ}.  Matrices store their columns the same way,
so applying a matrix to a sparse vector only touches the columns it needs.
Bulk nullspace computations are delegated to sympy's sparse DomainMatrix.
"""
from __future__ import annotations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

ZERO = QQ(0)
ONE = QQ(1)


def q(x):
    """Coerce an int, Fraction or QQ element to QQ."""
    if isinstance(x, int):
        return QQ(x)
    return QQ.convert(x)


def vadd(a: dict, b: dict, c=ONE) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, ZERO) + c * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vscale(c, a: dict) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def vshift(a: dict, offset: int) -> dict:
    return {k + offset: v for k, v in a.items()}


class SMat:
    """Sparse rational matrix stored by columns."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {j: c for j, c in (cols or {}).items() if c}

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {j: {j: ONE} for j in range(n)})

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = {}
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x:
                    cols.setdefault(j, {})[i] = q(x)
        return cls(nrows, ncols, cols)

    def col(self, j: int) -> dict:
        return self.cols.get(j, {})

    def apply(self, v: dict) -> dict:
        out = {}
        for j, c in v.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, x in col.items():
                w = out.get(i, ZERO) + c * x
                if w:
                    out[i] = w
                else:
                    del out[i]
        return out

    def __matmul__(self, other: "SMat") -> "SMat":
        assert self.ncols == other.nrows
        return SMat(self.nrows, other.ncols, {j: self.apply(c) for j, c in other.cols.items()})

    def __add__(self, other: "SMat") -> "SMat":
        cols = dict(self.cols)
        for j, c in other.cols.items():
            cols[j] = vadd(cols.get(j, {}), c)
        return SMat(self.nrows, self.ncols, cols)

    def __sub__(self, other: "SMat") -> "SMat":
        cols = dict(self.cols)
        for j, c in other.cols.items():
            cols[j] = vadd(cols.get(j, {}), c, -ONE)
        return SMat(self.nrows, self.ncols, cols)

    def scale(self, c) -> "SMat":
        c = q(c)
        return SMat(self.nrows, self.ncols, {j: vscale(c, v) for j, v in self.cols.items()})

    def transpose(self) -> "SMat":
        cols = {}
        for j, c in self.cols.items():
            for i, x in c.items():
                cols.setdefault(i, {})[j] = x
        return SMat(self.ncols, self.nrows, cols)

    def is_zero(self) -> bool:
        return not self.cols

    def entries(self):
        for j in sorted(self.cols):
            c = self.cols[j]
            for i in sorted(c):
                yield i, j, c[i]

    def to_rows(self):
        rows = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for i, j, x in self.entries():
            rows[i][j] = x
        return rows

    def __eq__(self, other):
        if not isinstance(other, SMat):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and (self - other).is_zero()

    def trace(self):
        return sum((self.cols.get(j, {}).get(j, ZERO) for j in range(self.ncols)), ZERO)

    def reindex(self, rows: list, cols: list) -> "SMat":
        """Submatrix on the given row and column index lists."""
        rpos = {r: k for k, r in enumerate(rows)}
        out = {}
        for k, j in enumerate(cols):
            c = self.cols.get(j)
            if c:
                v = {rpos[i]: x for i, x in c.items() if i in rpos}
                if v:
                    out[k] = v
        return SMat(len(rows), len(cols), out)

    def __repr__(self):
        return f"SMat({self.nrows}x{self.ncols}, nnz={sum(len(c) for c in self.cols.values())})"


def block_diag(mats: list) -> SMat:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    cols = {}
    ro = co = 0
    for m in mats:
        for j, c in m.cols.items():
            cols[co + j] = vshift(c, ro)
        ro += m.nrows
        co += m.ncols
    return SMat(nr, nc, cols)


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Each basis vector has pivot coefficient 1 at its smallest index and every
    other basis vector vanishes at that pivot.  An optional payload vector is
    carried through the same row operations, which records e.g. the image of
    each vector under a linear map being constructed.
    """

    def __init__(self, track_payload: bool = False):
        self.rows = {}      # pivot -> vector
        self.payload = {}   # pivot -> payload vector
        self.order = []     # pivots in insertion order
        self._occ = {}      # column -> set of pivots whose rows touch it
        self._track = track_payload

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, payload: dict | None = None):
        v = dict(v)
        pl = dict(payload) if payload is not None else None
        hits = [p for p in v if p in self.rows]
        while hits:
            for p in hits:
                c = v.get(p)
                if not c:
                    continue
                v = vadd(v, self.rows[p], -c)
                if pl is not None:
                    pl = vadd(pl, self.payload[p], -c)
            hits = [p for p in v if p in self.rows]
        return (v, pl) if payload is not None else v

    def add(self, v: dict, payload: dict | None = None) -> bool:
        if payload is not None or self._track:
            r, pl = self.reduce(v, payload or {})
        else:
            r, pl = self.reduce(v), None
        if not r:
            return False
        p = min(r)
        c = ONE / r[p]
        r = vscale(c, r)
        if pl is not None:
            pl = vscale(c, pl)
        for other in list(self._occ.get(p, ())):
            row = self.rows[other]
            f = row.get(p)
            if not f:
                continue
            newrow = vadd(row, r, -f)
            self._set(other, newrow)
            if pl is not None:
                self.payload[other] = vadd(self.payload[other], pl, -f)
        self._set(p, r)
        if pl is not None:
            self.payload[p] = pl
        self.order.append(p)
        return True

    def _set(self, p, row):
        old = self.rows.get(p)
        if old is not None:
            for k in old:
                s = self._occ.get(k)
                if s is not None:
                    s.discard(p)
        self.rows[p] = row
        for k in row:
            self._occ.setdefault(k, set()).add(p)

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def pivots(self) -> list:
        return sorted(self.rows)

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def coords(self, v: dict) -> dict:
        """Coordinates of v (assumed in the span) in the sorted-pivot basis."""
        piv = sorted(self.rows)
        pos = {p: k for k, p in enumerate(piv)}
        return {pos[p]: x for p, x in v.items() if p in pos}


def nullspace(rows: list, ncols: int) -> list:
    """Basis of {x : r.x = 0 for every sparse row r}, as sparse vectors."""
    if ncols == 0:
        return []
    rows = [r for r in rows if r]
    if not rows:
        return [{j: ONE} for j in range(ncols)]
    dod = {i: dict(r) for i, r in enumerate(rows)}
    m = DomainMatrix.from_dod(dod, (len(rows), ncols), QQ)
    ns = m.nullspace().to_sparse()
    rep = ns.rep
    out = []
    for i in range(ns.shape[0]):
        row = rep.get(i, {})
        v = {j: QQ.convert(x) for j, x in row.items() if x}
        # normalize so the last nonzero entry is 1 for determinism
        out.append(v)
    return out


def rank(vectors: list) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def independent_subset(vectors: list) -> list:
    """Indices of the first maximal linearly independent subfamily."""
    e = Echelon()
    return [k for k, v in enumerate(vectors) if e.add(v)]


def solve_combination(basis: list, target: dict):
    """Coefficients c with sum c_k basis[k] = target, or None."""
    e = Echelon()
    for k, v in enumerate(basis):
        e.add(v, {k: ONE})
    r, pl = e.reduce(target, {})
    if r:
        return None
    return {k: -x for k, x in pl.items()} if pl else {}
