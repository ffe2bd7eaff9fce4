"""The category of n-periodic bijections between subsets of Z/n.

Objects are subsets I of Z/n (stored by window representatives in [1, n]),
maps are n-periodic bijections between their preimages in Z. The graded
pointed version keeps a composite exactly when lengths add; the differential
resolves inversions subject to the affine cover conditions. The strands
algebra A(n) is the finite positive variant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .f2core import DegreeData, F2Sum, GammaContext
from . import hecke


@dataclass(frozen=True, order=True)
class SubsetZn:
    n: int
    members: tuple  # sorted window representatives in [1, n]

    def __post_init__(self):
        if not all(1 <= m <= self.n for m in self.members):
            raise ValueError("members must be window representatives in [1, n]")
        if tuple(sorted(set(self.members))) != self.members:
            raise ValueError("members must be sorted and distinct")

    def residues(self) -> frozenset:
        return frozenset(m % self.n for m in self.members)


@dataclass(frozen=True, order=True)
class PeriodicMap:
    """An n-periodic bijection source~ -> target~, stored on the window."""

    n: int
    source: SubsetZn
    target: SubsetZn
    images: tuple  # images[k] = σ(source.members[k])

    def __post_init__(self):
        tgt = sorted(v % self.n for v in self.images)
        if tgt != sorted(m % self.n for m in self.target.members):
            raise ValueError("induced residue map is not a bijection onto the target")
        if len(set(tgt)) != len(self.images):
            raise ValueError("residues collide")

    def __call__(self, i: int) -> int:
        r = i % self.n
        for m, v in zip(self.source.members, self.images):
            if m % self.n == r:
                return v + (i - m)
        raise ValueError(f"{i} not in the source")

    def in_source(self, i: int) -> bool:
        return i % self.n in {m % self.n for m in self.source.members}


def identity_map(I: SubsetZn) -> PeriodicMap:
    return PeriodicMap(I.n, I, I, I.members)


def compose(g: PeriodicMap, f: PeriodicMap) -> PeriodicMap:
    """g∘f; requires target(f) = source(g) as subsets of Z/n."""
    if f.n != g.n or f.target.residues() != g.source.residues():
        raise ValueError("object mismatch")
    return PeriodicMap(f.n, f.source, g.target, tuple(g(f(m)) for m in f.source.members))


def window_inversions(s: PeriodicMap) -> list:
    """L̃(σ): pairs (i, i') in the source preimage, 1 <= i <= n, i < i', σ(i) > σ(i')."""
    out = []
    members = s.source.members
    drop = max((m - s(m) for m in members), default=0)
    for i in members:
        for m in members:
            j = m if m > i else m + s.n * ((i - m) // s.n + 1)
            while j - drop <= s(i):
                if j > i and (j - i) % s.n != 0 and s(i) > s(j):
                    out.append((i, j))
                j += s.n
    return sorted(set(out))


def length(s: PeriodicMap) -> int:
    """Floor-formula length; agrees with |L̃(σ)| (tested)."""
    tot = 0
    members = s.source.members
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            tot += abs((s(members[b]) - s(members[a])) // s.n)
    return tot


def graded_product(g: PeriodicMap, f: PeriodicMap):
    """g∘f when lengths add, else None (the pointed zero)."""
    gf = compose(g, f)
    if length(gf) == length(g) + length(f):
        return gf
    return None


def d_set(s: PeriodicMap) -> list:
    """D̃(σ): inversions satisfying the two affine cover conditions."""
    out = []
    for (i1, i2) in window_inversions(s):
        if i2 - i1 >= s.n and s(i1) - s(i2) >= s.n:
            continue
        if any(s.in_source(i) and s(i1) > s(i) > s(i2) for i in range(i1 + 1, i2)):
            continue
        out.append((i1, i2))
    return out


def resolve(s: PeriodicMap, i1: int, i2: int) -> PeriodicMap:
    """σ^{i1,i2} = σ∘s_{i1,i2} restricted to the source."""
    def swapped(i):
        if (i - i1) % s.n == 0:
            return s(i2 + (i - i1))
        if (i - i2) % s.n == 0:
            return s(i1 + (i - i2))
        return s(i)

    return PeriodicMap(s.n, s.source, s.target,
                       tuple(swapped(m) for m in s.source.members))


def differential_map(s: PeriodicMap) -> F2Sum:
    """d(σ) = Σ σ^{i1,i2} over D̃(σ), as a GF(2) sum of PeriodicMaps."""
    return F2Sum(resolve(s, i1, i2) for (i1, i2) in d_set(s))


# ---------------------------------------------------------------------------
# the grading group Γ_n


class GammaN(GammaContext):
    """Γ_n = (1/2)Z x L_n x R_n with the central-extension pairing.

    R_n generators α_a and L_n generators ε_a are keyed by residues mod n.
    No folding: Γ_n keeps all ε_a.
    """

    def __init__(self, n: int):
        self.n = n

    def pair(self, a, b) -> dict:
        out = {}
        for r in range(self.n):
            xa = a.get(("a", r), 0) + a.get(("a", (r - 1) % self.n), 0)
            yb = b.get(("a", (r - 1) % self.n), 0) - b.get(("a", r), 0)
            if xa * yb:
                out[("e", r)] = out.get(("e", r), 0) + xa * yb
        return out


def alpha_interval(n: int, i: int, j: int) -> dict:
    """α_{i,j} = Σ_{i<=r<j} α_{r mod n} - Σ_{j<=r<i} α_{r mod n}."""
    out: dict = {}
    lo, hi, sgn = (i, j, 1) if i <= j else (j, i, -1)
    for r in range(lo, hi):
        k = ("a", r % n)
        out[k] = out.get(k, 0) + sgn
    return {k: v for k, v in out.items() if v}


def class_of(s: PeriodicMap) -> dict:
    """⟦σ⟧ = Σ_{i in window} α_{i,σ(i)} in R_n."""
    out: dict = {}
    for m in s.source.members:
        for k, v in alpha_interval(s.n, m, s(m)).items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def m_of(s: PeriodicMap) -> dict:
    """m(σ) = ⟦σ⟧ · ε_I in L_n."""
    x = class_of(s)
    out = {}
    for m in s.source.members:
        b = m % s.n
        coeff = x.get(("a", b), 0) + x.get(("a", (b - 1) % s.n), 0)
        if coeff:
            out[("e", b)] = out.get(("e", b), 0) + coeff
    return out


def dm(s: PeriodicMap) -> DegreeData:
    """dm(σ) = (-m(σ), ⟦σ⟧) in Γ'_n (maslov part zero)."""
    return DegreeData.make({}, {k: -v for k, v in m_of(s).items()}, class_of(s))


def degree(s: PeriodicMap) -> DegreeData:
    """deg data (-ℓ(σ), -m(σ), ⟦σ⟧); the dm part multiplies under composition."""
    return DegreeData.make({"*": -2 * length(s)}, {k: -v for k, v in m_of(s).items()},
                           class_of(s))


# ---------------------------------------------------------------------------
# transport from the extended affine symmetric group


def beta_map(I: SubsetZn):
    """β_I: Z -> I~, the increasing bijection with β_I(k + d|I|) = β_I(k) + dn."""
    members = I.members
    k = len(members)

    def beta(r: int) -> int:
        q, rem = divmod(r - 1, k)
        return members[rem] + q * I.n

    def beta_inv(v: int) -> int:
        q, rem = divmod(v - 1, I.n)
        idx = members.index(rem + 1)
        return idx + 1 + q * k

    return beta, beta_inv


def F_I(I: SubsetZn, s: hecke.AffinePerm) -> PeriodicMap:
    """The isomorphism Ŝ_{|I|} -> End(I), σ -> β_I ∘ σ ∘ β_I^{-1}."""
    if s.n != len(I.members):
        raise ValueError("rank mismatch")
    beta, beta_inv = beta_map(I)
    return PeriodicMap(I.n, I, I, tuple(beta(s(beta_inv(m))) for m in I.members))


def F_I_inv(I: SubsetZn, g: PeriodicMap) -> hecke.AffinePerm:
    beta, beta_inv = beta_map(I)
    k = len(I.members)
    return hecke.AffinePerm(k, tuple(beta_inv(g(beta(i))) for i in range(1, k + 1)))


# ---------------------------------------------------------------------------
# strands algebra A(n)


def is_fpp(s: PeriodicMap) -> bool:
    """Member of the f++ variant: σ(i) >= i and σ(window) inside [1, n]."""
    return all(m <= s(m) <= s.n for m in s.source.members)


@lru_cache(maxsize=None)
def strands_algebra_basis(n: int) -> tuple:
    """All f++ maps between subsets of Z/n (the basis of A(n)).

    A(0) is one-dimensional: the identity of the empty subset (realized
    inside Z/1, which has the same empty object).
    """
    if n == 0:
        return (identity_map(SubsetZn(1, ())),)
    out = []
    for size in range(0, n + 1):
        for members in itertools.combinations(range(1, n + 1), size):
            I = SubsetZn(n, members)
            for images in itertools.permutations(range(1, n + 1), size):
                ok = all(m <= v <= n for m, v in zip(members, images))
                if not ok:
                    continue
                tgt = SubsetZn(n, tuple(sorted(images)))
                out.append(PeriodicMap(n, I, tgt, images))
    return tuple(sorted(out))


def strands_algebra(n: int) -> dict:
    """Basis, product table and differential table of A(n)."""
    basis = strands_algebra_basis(n)
    index = {b: i for i, b in enumerate(basis)}
    products = {}
    for i, g in enumerate(basis):
        for j, f in enumerate(basis):
            if f.target.residues() != g.source.residues():
                continue
            gf = graded_product(g, f)
            products[(i, j)] = index[gf] if gf is not None else None
    diffs = {i: sorted(index[t] for t in differential_map(b)) for i, b in enumerate(basis)}
    return {"n": n, "basis": basis, "products": products, "differentials": diffs}


def subsets(n: int):
    for size in range(0, n + 1):
        for members in itertools.combinations(range(1, n + 1), size):
            yield SubsetZn(n, members)


def hom_maps(I: SubsetZn, J: SubsetZn, lmax: int, c_bound: int) -> list:
    """All maps I -> J with length <= lmax and window images within n·(c_bound+1)."""
    n = I.n
    k = len(I.members)
    if len(J.members) != k:
        return []
    out = []
    choices = []
    for m in I.members:
        opts = []
        for t in J.members:
            for d in range(-c_bound - 1, c_bound + 2):
                opts.append(t + d * n)
        choices.append(opts)
    for images in itertools.product(*choices):
        if sorted(v % n for v in images) != sorted(t % n for t in J.members):
            continue
        if len(set(v % n for v in images)) != k:
            continue
        g = PeriodicMap(n, I, J, images)
        if length(g) <= lmax:
            out.append(g)
    return sorted(set(out))
