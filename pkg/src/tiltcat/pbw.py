"""PBW normal forms in the enveloping algebra of g (x) t C[t], truncated by degree.

A basis element of the Lie algebra is a pair (deg, k): the Chevalley basis
element k tensored with t^deg.  Monomials are nondecreasing tuples of such
pairs; polynomials are dicts {monomial: int}.  All structure constants are
integers, so normal ordering never leaves Z.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from tiltcat.rootdata import RootSystem


class TruncatedEnvelope:
    def __init__(self, rs: RootSystem, max_degree: int):
        self.rs = rs
        self.D = max_degree
        self._mul = {}

    def degree(self, mono) -> int:
        return sum(d for d, _ in mono)

    def weight(self, mono) -> tuple:
        w = self.rs.zero
        for _, k in mono:
            w = tuple(a + b for a, b in zip(w, self.rs.basis_weight(k)))
        return w

    def lie_bracket(self, x, y) -> dict:
        d = x[0] + y[0]
        if d > self.D:
            return {}
        return {(d, k): c for k, c in self.rs.bracket(x[1], y[1]).items()}

    def left_mul(self, x, mono) -> dict:
        """x * mono in normal form, dropping degree > D."""
        key = (x, mono)
        hit = self._mul.get(key)
        if hit is not None:
            return hit
        if x[0] + self.degree(mono) > self.D:
            out = {}
        elif not mono or x <= mono[0]:
            out = {(x,) + mono: 1}
        else:
            head, rest = mono[0], mono[1:]
            out = {}
            # x head rest = head (x rest) + [x, head] rest
            for m, c in self.left_mul(x, rest).items():
                for mm, cc in self.left_mul(head, m).items():
                    out[mm] = out.get(mm, 0) + c * cc
            for z, c in self.lie_bracket(x, head).items():
                for mm, cc in self.left_mul(z, rest).items():
                    out[mm] = out.get(mm, 0) + c * cc
            out = {m: c for m, c in out.items() if c}
        self._mul[key] = out
        return out

    def mul_word(self, word) -> dict:
        """Normal form of the product of a sequence of Lie algebra elements."""
        poly = {(): 1}
        for x in reversed(word):
            new = {}
            for m, c in poly.items():
                for mm, cc in self.left_mul(x, m).items():
                    new[mm] = new.get(mm, 0) + c * cc
            poly = {m: c for m, c in new.items() if c}
        return poly

    def ad_degree_zero(self, k: int, mono) -> dict:
        """[y_k, mono] for a degree-zero Chevalley basis element y_k."""
        out = {}
        for j, (d, b) in enumerate(mono):
            for kk, c in self.rs.bracket(k, b).items():
                word = mono[:j] + ((d, kk),) + mono[j + 1:]
                for m, cc in self.mul_word(word).items():
                    out[m] = out.get(m, 0) + c * cc
        return {m: c for m, c in out.items() if c}

    @lru_cache(maxsize=None)
    def monomials(self, degree: int) -> tuple:
        """All PBW monomials of exact degree `degree`."""
        gens = [(d, k) for d in range(1, degree + 1) for k in range(self.rs.dim)]
        out = []
        for n in range(1, degree + 1):
            for combo in combinations_with_replacement(gens, n):
                if sum(d for d, _ in combo) == degree:
                    out.append(combo)
        if degree == 0:
            out = [()]
        return tuple(sorted(out))
