"""Tiny GF(2) linear algebra on int bitrows (exact, dependency-free)."""

from __future__ import annotations


class BitBasis:
    """An online row-echelon basis of GF(2) vectors packed into ints."""

    def __init__(self):
        self.pivots: dict = {}  # pivot bit -> reduced row

    def reduce(self, v: int) -> int:
        while v:
            p = v.bit_length() - 1
            row = self.pivots.get(p)
            if row is None:
                return v
            v ^= row
        return 0

    def insert(self, v: int) -> bool:
        """Reduce and insert; True if the vector enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def dim(self) -> int:
        return len(self.pivots)


def span_dim(vectors) -> int:
    basis = BitBasis()
    for v in vectors:
        basis.insert(v)
    return basis.dim


class QuotientSpace:
    """F2 span of an indexed basis modulo a relation subspace.

    Vectors are dicts/iterables of basis keys; canonical forms are ints
    reduced modulo the relation span.
    """

    def __init__(self, keys):
        self.index = {k: i for i, k in enumerate(sorted(keys))}
        self.rels = BitBasis()

    def vec(self, keys) -> int:
        v = 0
        for k in keys:
            v ^= 1 << self.index[k]
        return v

    def add_relation(self, keys):
        self.rels.insert(self.vec(keys))

    def canon(self, keys) -> int:
        return self.rels.reduce(self.vec(keys))

    def canon_vec(self, v: int) -> int:
        return self.rels.reduce(v)

    @property
    def dim(self) -> int:
        return len(self.index) - self.rels.dim
