"""Symmetric and extended affine symmetric groups and their nil Hecke algebras.

Basis elements T_w are indexed by permutations; products vanish unless lengths
add, and the differential sums over Bruhat covers (length drop exactly one).
Everything is over GF(2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .f2core import F2Sum


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {1..n} in one-line notation: images[i-1] = w(i)."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inv(self) -> "Perm":
        out = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            out[v - 1] = i
        return Perm(tuple(out))


def identity_perm(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def perm_mul(u: Perm, v: Perm) -> Perm:
    """Composition u∘v (apply v first)."""
    return Perm(tuple(u(v(i)) for i in range(1, v.n + 1)))


def length(w) -> int:
    """Coxeter length: inversion count (finite) / crossing count (affine)."""
    if isinstance(w, Perm):
        im = w.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])
    return _affine_length_floor(w)


def longest_perm(m: int) -> Perm:
    """w_m(i) = m - i + 1."""
    return Perm(tuple(range(m, 0, -1)))


def simple(n: int, i: int) -> Perm:
    im = list(range(1, n + 1))
    im[i - 1], im[i] = im[i], im[i - 1]
    return Perm(tuple(im))


def all_perms(n: int):
    return (Perm(p) for p in itertools.permutations(range(1, n + 1)))


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Chevalley-Bruhat order via the rank-matrix dominance criterion."""
    n = u.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cu = sum(1 for k in range(1, i + 1) if u(k) >= j)
            cw = sum(1 for k in range(1, i + 1) if w(k) >= j)
            if cu > cw:
                return False
    return True


# ---------------------------------------------------------------------------
# extended affine symmetric group


@dataclass(frozen=True, order=True)
class AffinePerm:
    """An n-periodic bijection of Z stored by its window images[1..n]."""

    n: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.n or self.n < 1:
            raise ValueError("window size mismatch")
        if sorted(v % self.n for v in self.images) != list(range(self.n)):
            raise ValueError(f"residues not a complete system mod {self.n}: {self.images}")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.images[r] + q * self.n

    def inv(self) -> "AffinePerm":
        out = [0] * self.n
        for i in range(1, self.n + 1):
            v = self(i)
            q, r = divmod(v - 1, self.n)
            out[r] = i - q * self.n
        return AffinePerm(self.n, tuple(out))

    def c_degree(self) -> int:
        tot = sum(v - i for i, v in enumerate(self.images, start=1))
        assert tot % self.n == 0
        return tot // self.n

    def is_positive(self) -> bool:
        return all(v >= 1 for v in self.images)

    def is_finite(self) -> bool:
        return all(1 <= v <= self.n for v in self.images)


def identity_affine(n: int) -> AffinePerm:
    return AffinePerm(n, tuple(range(1, n + 1)))


def shift_c(n: int, d: int = 1) -> AffinePerm:
    """The shift c^d: i -> i + d."""
    return AffinePerm(n, tuple(i + d for i in range(1, n + 1)))


def affine_mul(u: AffinePerm, v: AffinePerm) -> AffinePerm:
    return AffinePerm(u.n, tuple(u(v(i)) for i in range(1, u.n + 1)))


def transposition_affine(n: int, i: int, j: int) -> AffinePerm:
    """s_{ij} swapping i + nZ and j + nZ."""
    if (i - j) % n == 0:
        raise ValueError("i = j mod n")
    im = list(range(1, n + 1))
    qi, ri = divmod(i - 1, n)
    qj, rj = divmod(j - 1, n)
    im[ri] = j - qi * n
    im[rj] = i - qj * n
    return AffinePerm(n, tuple(im))


def embed_affine(w: Perm) -> AffinePerm:
    return AffinePerm(w.n, w.images)


def _affine_length_floor(s: AffinePerm) -> int:
    n = s.n
    tot = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            tot += abs((s(j) - s(i)) // n)
    return tot


def affine_inversions(s: AffinePerm) -> list:
    """The set L̃(σ): pairs (i, j), 1 <= i <= n, i < j, σ(i) > σ(j)."""
    n = s.n
    out = []
    drop = max(i - s(i) for i in range(1, n + 1))
    for i in range(1, n + 1):
        j = i + 1
        while j - drop <= s(i):
            if (j - i) % n != 0 and s(i) > s(j):
                out.append((i, j))
            j += 1
    return out


def affine_covers(s: AffinePerm) -> list:
    """Bruhat covers below σ: σ∘s_{j1,j2} for (j1,j2) in D̃(σ).

    (j1,j2) runs over inversions with j1 in [1,n] satisfying the two cover
    conditions: j2-j1 < n or σ(j1)-σ(j2) < n, and no i strictly between with
    σ(j1) > σ(i) > σ(j2).
    """
    out = []
    for (j1, j2) in affine_inversions(s):
        if j2 - j1 >= s.n and s(j1) - s(j2) >= s.n:
            continue
        if any(s(j1) > s(i) > s(j2) for i in range(j1 + 1, j2)):
            continue
        out.append(((j1, j2), affine_mul(s, transposition_affine(s.n, j1, j2))))
    return out


# ---------------------------------------------------------------------------
# nil Hecke elements

AMBIENTS = ("H", "Hhat", "Hhat+")


@dataclass(frozen=True)
class NilHeckeElem:
    """A GF(2) sum of T_w basis tokens together with its ambient algebra."""

    ambient: str
    n: int
    sum: F2Sum

    def __post_init__(self):
        if self.ambient not in AMBIENTS:
            raise ValueError(f"unknown ambient {self.ambient}")
        for w in self.sum:
            if self.ambient == "H" and not isinstance(w, Perm):
                raise ValueError("finite ambient holds Perm tokens")
            if self.ambient != "H" and not isinstance(w, AffinePerm):
                raise ValueError("affine ambient holds AffinePerm tokens")
            wn = w.n
            if wn != self.n:
                raise ValueError("rank mismatch")
            if self.ambient == "Hhat+" and not w.is_positive():
                raise ValueError("non-positive token in Hhat+")

    def __add__(self, other: "NilHeckeElem") -> "NilHeckeElem":
        self._check(other)
        return NilHeckeElem(self.ambient, self.n, self.sum + other.sum)

    def _check(self, other: "NilHeckeElem"):
        if (self.ambient, self.n) != (other.ambient, other.n):
            raise ValueError("ambient mismatch")

    def __bool__(self):
        return bool(self.sum)


def elem(ambient: str, n: int, *perms) -> NilHeckeElem:
    return NilHeckeElem(ambient, n, F2Sum(perms))


def basis_mul(a, b):
    """T_a T_b = T_{ab} when lengths add, else None (the pointed zero)."""
    if isinstance(a, Perm):
        ab = perm_mul(a, b)
    else:
        ab = affine_mul(a, b)
    if length(ab) == length(a) + length(b):
        return ab
    return None


def mult(x: NilHeckeElem, y: NilHeckeElem) -> NilHeckeElem:
    x._check(y)
    acc = F2Sum()
    for a in x.sum:
        for b in y.sum:
            ab = basis_mul(a, b)
            if ab is not None:
                acc = acc + F2Sum.of(ab)
    return NilHeckeElem(x.ambient, x.n, acc)


def basis_d(w):
    """d(T_w): sum over Bruhat covers with length drop one."""
    if isinstance(w, Perm):
        return F2Sum(c for _, c in affine_covers(embed_affine(w))).map(
            lambda a: F2Sum.of(Perm(a.images))
        )
    return F2Sum(c for _, c in affine_covers(w))


def differential(x: NilHeckeElem) -> NilHeckeElem:
    return NilHeckeElem(x.ambient, x.n, x.sum.map(basis_d))


# ---------------------------------------------------------------------------
# traces and regular bimodules (type A, S = S_{r+n}, I = S_r)


def _in_low_subgroup(w: Perm, r: int) -> bool:
    return all(w(i) == i for i in range(r + 1, w.n + 1))


def _restrict(w: Perm, r: int) -> Perm:
    assert _in_low_subgroup(w, r)
    return Perm(w.images[:r])


def _extend(w: Perm, m: int) -> Perm:
    """Embed S_r into S_m on the first r letters."""
    return Perm(w.images + tuple(range(w.n + 1, m + 1)))


def trace_basis(sign: str, r: int, n: int, w: Perm):
    """t^±_{r+n,r}(T_w) as a Perm in S_r, or None."""
    m = r + n
    if w.n != m:
        raise ValueError("element must live in H_{r+n}")
    wm = longest_perm(m)
    wr = _extend(longest_perm(r), m)
    if sign == "+":
        x = perm_mul(wm, w)
        if not _in_low_subgroup(x, r):
            return None
        return _restrict(perm_mul(wr, perm_mul(wm, w)), r)
    if sign == "-":
        x = perm_mul(w, wm)
        if not _in_low_subgroup(x, r):
            return None
        return _restrict(perm_mul(w, perm_mul(wm, wr)), r)
    raise ValueError("sign must be '+' or '-'")


def trace(sign: str, r: int, n: int, x: NilHeckeElem) -> NilHeckeElem:
    if x.ambient != "H" or x.n != r + n:
        raise ValueError("trace needs a finite element of H_{r+n}")
    acc = F2Sum()
    for w in x.sum:
        t = trace_basis(sign, r, n, w)
        if t is not None:
            acc = acc + F2Sum.of(t)
    return NilHeckeElem("H", r, acc)


def iota_n(w: Perm) -> Perm:
    """T_i -> T_{n-i}: conjugation by the longest element."""
    w0 = longest_perm(w.n)
    return perm_mul(w0, perm_mul(w, w0))


def f_shift(w: Perm, r: int) -> Perm:
    """f_r: T_i -> T_{r+i}, so S_n acts on the letters r+1..r+n."""
    return Perm(tuple(range(1, r + 1)) + tuple(v + r for v in w.images))


def _lift(h: NilHeckeElem, f) -> F2Sum:
    return F2Sum(f(w) for w in h.sum)


def bimodule_action(side: str, r: int, n: int, h: tuple,
                    x: NilHeckeElem, h2: NilHeckeElem) -> NilHeckeElem:
    """(h, h2) acting on x in the four bimodules L±(r,n), R±(r,n).

    ``h`` is the H_r ⊗ H_n factor, encoded as the pair (h_r, h_n); ``h2`` is
    the H_{r+n} factor. For L± the pair acts on the left and h2 on the right,
    for R± the other way around.
    """
    hr, hn = h
    return pair_action(side, r, n, hr, hn, x, h2)


def pair_action(side: str, r: int, n: int, hr: NilHeckeElem, hn: NilHeckeElem,
                x: NilHeckeElem, outer: NilHeckeElem) -> NilHeckeElem:
    """Twisted multiplication defining L±(r,n) and R±(r,n) on H_{r+n}.

    Twists: L+/R+ send h_n through f_r∘ι_n and h_r through the low embedding;
    L-/R- send h_r through f_n and h_n through the low embedding.
    """
    m = r + n
    if hr.n != r or hn.n != n or x.n != m or outer.n != m:
        raise ValueError("index out of range")
    if side in ("L+", "R+"):
        a = _lift(hr, lambda w: _extend(w, m))
        b = _lift(hn, lambda w: f_shift(iota_n(w), r))
    elif side in ("L-", "R-"):
        a = _lift(hr, lambda w: f_shift(w, n))
        b = _lift(hn, lambda w: _extend(w, m))
    else:
        raise ValueError("side must be one of L+, L-, R+, R-")
    ha = NilHeckeElem("H", m, a)
    hb = NilHeckeElem("H", m, b)
    inner = mult(ha, hb)
    if side.startswith("L"):
        return mult(mult(inner, x), outer)
    return mult(outer, mult(x, inner))


def min_coset_reps(r: int, m: int) -> list:
    """W^I: minimal-length representatives of S_m / S_r (increasing on 1..r)."""
    out = [w for w in all_perms(m) if all(w(i) < w(i + 1) for i in range(1, r))]
    return sorted(out, key=lambda w: (length(w), w.images))


def dual_basis_pairing(sign: str, r: int, n: int):
    """The matrix [t^±(T_a T_b)] over the dual bases; identity on success.

    Returns (matrix, clean) where matrix[i][j] = 1 iff the trace equals T_e,
    and clean is False if some entry was neither 0 nor T_e.
    """
    m = r + n
    wm = longest_perm(m)
    wr = _extend(longest_perm(r), m)
    reps = min_coset_reps(r, m)
    if sign == "-":
        reps = [w.inv() for w in reps]
    rows = []
    clean = True
    e = identity_perm(r)
    for v in reps:
        row = []
        for w in reps:
            if sign == "+":
                a = perm_mul(wm, perm_mul(wr, v.inv()))
                prod = basis_mul(a, w)
            else:
                b = perm_mul(w.inv(), perm_mul(wr, wm))
                prod = basis_mul(v, b)
            if prod is None:
                row.append(0)
                continue
            t = trace_basis(sign, r, n, prod)
            if t is None:
                row.append(0)
            elif t == e:
                row.append(1)
            else:
                row.append(0)
                clean = False
        rows.append(row)
    return rows, clean


# ---------------------------------------------------------------------------
# positive submonoid and its presentation


def c_I(n: int, I: tuple) -> AffinePerm:
    """c_I = (c s_{n-1}..s_{i_1+r-1})(c s_{n-1}..s_{i_2+r-2})...(c s_{n-1}..s_{i_r})."""
    r = len(I)
    acc = identity_affine(n)
    for k, i_k in enumerate(I, start=1):
        factor = shift_c(n)
        for a in range(n - 1, i_k + r - k - 1, -1):
            factor = affine_mul(factor, embed_affine(simple(n, a)))
        acc = affine_mul(acc, factor)
    return acc


def chains(n: int, c_bound: int):
    """All families (I_1..I_m) with I_1 ⊆ [1,n], I_r ⊆ [1,|I_{r-1}|], Σ|I_r| <= bound."""

    def go(limit: int, budget: int):
        yield ()
        for size in range(1, min(limit, budget) + 1):
            for I in itertools.combinations(range(1, limit + 1), size):
                for rest in go(size, budget - size):
                    yield (I,) + rest

    return list(go(n, c_bound))


def positive_elements(n: int, c_bound: int) -> set:
    """Brute enumeration of Ŝ_n^+ with c-degree <= bound via (Z>=0)^n ⋊ S_n."""
    out = set()
    for lam in itertools.product(range(c_bound + 1), repeat=n):
        if sum(lam) > c_bound:
            continue
        for u in all_perms(n):
            out.add(AffinePerm(n, tuple(u(i) + n * lam[u(i) - 1] for i in range(1, n + 1))))
    return out


def positive_presentation_check(n: int, c_bound: int) -> dict:
    """Verify the presentation relations of Ĥ_n^+ and the (w, chain) bijection."""
    if n < 2:
        raise ValueError("n >= 2 required")
    failures = []
    c = shift_c(n)
    ts = {i: embed_affine(simple(n, i)) for i in range(1, n)}

    def nil(*els):
        acc = elem("Hhat", n, identity_affine(n))
        for e in els:
            acc = mult(acc, elem("Hhat", n, e))
        return acc

    for i in range(1, n):
        if nil(ts[i], ts[i]):
            failures.append(f"T_{i}^2 != 0")
        for j in range(i + 2, n):
            if nil(ts[i], ts[j]) != nil(ts[j], ts[i]):
                failures.append(f"T_{i} T_{j} commutation fails")
    if n > 2:
        for i in range(1, n - 1):
            if nil(ts[i], ts[i + 1], ts[i]) != nil(ts[i + 1], ts[i], ts[i + 1]):
                failures.append(f"braid relation at {i} fails")
    for i in range(1, n - 1):
        if nil(c, ts[i]) != nil(ts[i + 1], c):
            failures.append(f"c T_{i} != T_{i+1} c")
    if nil(c, c, ts[n - 1]) != nil(ts[1], c, c):
        failures.append("c^2 T_{n-1} != T_1 c^2")

    # bijection (w, (I_1..I_m)) -> w c_{I_m} ... c_{I_1}
    seen = {}
    for w in all_perms(n):
        aw = embed_affine(w)
        for ch in chains(n, c_bound):
            acc = aw
            for I in reversed(ch):
                acc = affine_mul(acc, c_I(n, I))
            if acc in seen:
                failures.append(f"collision: {(w.images, ch)} vs {seen[acc]}")
            seen[acc] = (w.images, ch)
            if not acc.is_positive():
                failures.append(f"non-positive image for {(w.images, ch)}")
    expected = positive_elements(n, c_bound)
    got = {s for s in seen if s.c_degree() <= c_bound}
    if {s for s in expected} != got:
        failures.append("chain parametrization misses/overshoots the positive window")
    return {
        "check": "positive_presentation",
        "parameters": {"n": n, "cBound": c_bound},
        "status": "pass" if not failures else "fail",
        "counterexample": failures[:5] or None,
        "count": len(got),
    }


# ---------------------------------------------------------------------------
# basis enumeration helpers


@lru_cache(maxsize=None)
def affine_weyl_ball(n: int, lmax: int) -> tuple:
    """Elements of W_n (c-degree 0) with length <= lmax, by BFS over s_a."""
    gens = [transposition_affine(n, i, i + 1) for i in range(1, n + 1)]
    seen = {identity_affine(n)}
    frontier = [identity_affine(n)]
    for _ in range(lmax):
        nxt = []
        for w in frontier:
            for s in gens:
                ws = affine_mul(w, s)
                if ws not in seen and length(ws) == length(w) + 1:
                    seen.add(ws)
                    nxt.append(ws)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (length(w), w.images)))


def affine_ball(n: int, lmax: int, c_bound: int) -> list:
    """Basis tokens of Ĥ_n with length <= lmax and |c-degree| <= c_bound."""
    out = []
    for w in affine_weyl_ball(n, lmax):
        for d in range(-c_bound, c_bound + 1):
            out.append(affine_mul(w, shift_c(n, d)))
    return sorted(out, key=lambda w: (length(w), w.c_degree(), w.images))
