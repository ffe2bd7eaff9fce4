"""The tensor algebra of the gluing bimodule against the positive affine part.

M_s = R^-(s-1,1) ⊗_{H_{s-1}} L^+(s-1,1) maps to the degree-one slice of the
positive extended affine algebra by a ⊗ b -> a·c·b; modulo the single
relation κ = 1⊗1⊗1⊗T_{s-1} + T_1⊗1⊗1⊗1 the tensor algebra over H_s matches
Ĥ_s^+ slice by slice (graded dimensions, products, differentials).
"""

from __future__ import annotations

import itertools

from .. import hecke
from ..f2core import F2Sum
from ..gf2 import BitBasis


def _perms(s: int) -> list:
    return sorted(hecke.all_perms(s), key=lambda w: (hecke.length(w), w.images))


def _tuples(s: int, m: int) -> list:
    """Basis monomials of the free stage: 2m-tuples of permutations."""
    return [t for t in itertools.product(_perms(s), repeat=2 * m)]


def _tuple_to_affine(s: int, t: tuple):
    """a_1 c b_1 a_2 c b_2 ... in the extended affine algebra, or None."""
    elems = []
    for k, w in enumerate(t):
        elems.append(hecke.embed_affine(w))
        if k % 2 == 0:
            elems.append(hecke.shift_c(s))
    prod = hecke.identity_affine(s)
    total = 0
    for e in elems:
        prod = hecke.affine_mul(prod, e)
        total += hecke.length(e)
    if hecke.length(prod) != total:
        return None
    return prod


def _d_tuple(s: int, t: tuple) -> F2Sum:
    """Leibniz differential of a monomial (d(c) = 0)."""
    acc = F2Sum()
    for k in range(len(t)):
        for w in hecke.basis_d(t[k]):
            acc = acc + F2Sum.of(t[:k] + (w,) + t[k + 1:])
    return acc


class ThetaStage:
    """The degree-m stage of T_{H_s}(M_s) as an indexed GF(2) space."""

    def __init__(self, s: int, m: int):
        self.s = s
        self.m = m
        self.basis = _tuples(s, m)
        self.index = {t: i for i, t in enumerate(self.basis)}
        self.rels = BitBasis()
        # h in H_{s-1}: right action via f_1 (letters 2..s), left via the
        # low embedding (letters 1..s-1)
        low = [(hecke.f_shift(hecke.simple(s - 1, j), 1),
                hecke._extend(hecke.simple(s - 1, j), s))
               for j in range(1, s - 1)]
        full = [hecke.simple(s, j) for j in range(1, s)]
        for t in self.basis:
            for pair in range(m):
                a, b = t[2 * pair], t[2 * pair + 1]
                for h_right, h_left in low:
                    # (a · f_1(h)) ⊗ b  ~  a ⊗ (h · b)
                    left = hecke.basis_mul(a, h_right)
                    right = hecke.basis_mul(h_left, b)
                    vec = 0
                    if left is not None:
                        vec ^= 1 << self.index[t[:2 * pair] + (left, b) + t[2 * pair + 2:]]
                    if right is not None:
                        vec ^= 1 << self.index[t[:2 * pair] + (a, right) + t[2 * pair + 2:]]
                    self.rels.insert(vec)
            for gap in range(m - 1):
                b, a2 = t[2 * gap + 1], t[2 * gap + 2]
                for g in full:
                    left = hecke.basis_mul(b, g)
                    right = hecke.basis_mul(g, a2)
                    vec = 0
                    if left is not None:
                        vec ^= 1 << self.index[t[:2 * gap + 1] + (left, a2) + t[2 * gap + 3:]]
                    if right is not None:
                        vec ^= 1 << self.index[t[:2 * gap + 1] + (b, right) + t[2 * gap + 3:]]
                    self.rels.insert(vec)

    def vec(self, tuples) -> int:
        v = 0
        for t in tuples:
            v ^= 1 << self.index[t]
        return v

    def canon(self, tuples) -> int:
        return self.rels.reduce(self.vec(tuples))

    @property
    def dim(self) -> int:
        return len(self.basis) - self.rels.dim


def kappa_vectors(s: int, m: int, stage: ThetaStage) -> list:
    """Generators u ⊗ κ ⊗ v of the degree-m piece of the ideal (κ)."""
    if s < 2 or m < 2:
        return []
    e = hecke.identity_perm(s)
    k1 = (e, e, e, hecke.simple(s, s - 1))
    k2 = (hecke.simple(s, 1), e, e, e)
    out = []
    perms = list(hecke.all_perms(s))
    for j in range(m - 1):
        for u in _tuples(s, j):
            for v in _tuples(s, m - 2 - j):
                for w in perms:
                    for wp in perms:
                        terms = []
                        for core in (k1, k2):
                            t = u + core + v
                            first = hecke.basis_mul(w, t[0])
                            last = hecke.basis_mul(t[-1], wp)
                            if first is None or last is None:
                                continue
                            terms.append((first,) + t[1:-1] + (last,))
                        if terms:
                            out.append(stage.vec(terms))
    return out


def positive_slice(s: int, m: int) -> list:
    """Basis of the c-degree-m slice of the positive submonoid."""
    out = []
    for lam in itertools.product(range(m + 1), repeat=s):
        if sum(lam) != m:
            continue
        for u in hecke.all_perms(s):
            out.append(hecke.AffinePerm(
                s, tuple(u(i) + s * lam[u(i) - 1] for i in range(1, s + 1))))
    return sorted(set(out), key=lambda w: (hecke.length(w), w.images))


def theta_check(s: int, c_bound: int) -> dict:
    """Graded dimensions, products and differentials of T(M)/(κ) vs Ĥ_s^+."""
    failures = []
    if s >= 2:
        c = hecke.shift_c(s)
        lhs = hecke.mult(hecke.mult(hecke.elem("Hhat", s, c), hecke.elem("Hhat", s, c)),
                         hecke.elem("Hhat", s, hecke.embed_affine(hecke.simple(s, s - 1))))
        rhs = hecke.mult(hecke.elem("Hhat", s, hecke.embed_affine(hecke.simple(s, 1))),
                         hecke.mult(hecke.elem("Hhat", s, c), hecke.elem("Hhat", s, c)))
        if lhs != rhs:
            failures.append("c^2 T_{s-1} != T_1 c^2")
    stages = {}
    for m in range(1, c_bound + 1):
        stage = ThetaStage(s, m)
        stages[m] = stage
        slice_basis = positive_slice(s, m)
        slice_index = {w: i for i, w in enumerate(slice_basis)}

        def phi_vec(tuples) -> int:
            v = 0
            for t in tuples:
                w = _tuple_to_affine(s, t)
                if w is not None:
                    v ^= 1 << slice_index[w]
            return v

        # well-defined on the relations: relation rows map to zero
        for row in list(stage.rels.pivots.values()):
            tuples = [stage.basis[i] for i in range(len(stage.basis))
                      if (row >> i) & 1]
            if phi_vec(tuples):
                failures.append(f"phi not well defined at degree {m}")
                break
        # ideal maps to zero and the quotient dimensions agree
        combined = BitBasis()
        for row in stage.rels.pivots.values():
            combined.insert(row)
        for kv in kappa_vectors(s, m, stage):
            tuples = [stage.basis[i] for i in range(len(stage.basis))
                      if (kv >> i) & 1]
            if phi_vec(tuples):
                failures.append(f"kappa ideal not killed at degree {m}")
            combined.insert(kv)
        qdim = len(stage.basis) - combined.dim
        if qdim != len(slice_basis):
            failures.append(f"graded dimension {qdim} != {len(slice_basis)} "
                            f"at degree {m}")
        # surjectivity of phi
        img = BitBasis()
        rank = 0
        for t in stage.basis:
            v = phi_vec([t])
            if img.insert(v):
                rank += 1
        if rank != len(slice_basis):
            failures.append(f"phi not surjective at degree {m}")
        # differential intertwines
        for t in stage.basis[:: max(1, len(stage.basis) // 200)]:
            w = _tuple_to_affine(s, t)
            dw = hecke.basis_d(w) if w is not None else F2Sum()
            if phi_vec(list(_d_tuple(s, t))) != _vec_of_affine(dw, slice_index):
                failures.append(f"phi does not intertwine d at degree {m}")
                break
    # products: monomial concatenation maps to products on samples
    for m1 in range(1, c_bound):
        for m2 in range(1, c_bound - m1 + 1):
            for t1 in _tuples(s, m1)[:: max(1, len(_tuples(s, m1)) // 12)]:
                for t2 in _tuples(s, m2)[:: max(1, len(_tuples(s, m2)) // 12)]:
                    w1 = _tuple_to_affine(s, t1)
                    w2 = _tuple_to_affine(s, t2)
                    w12 = _tuple_to_affine(s, t1 + t2)
                    prod = None
                    if w1 is not None and w2 is not None:
                        prod = hecke.basis_mul(w1, w2)
                    if prod != w12:
                        failures.append("phi not multiplicative")
    return {
        "check": "theta",
        "parameters": {"s": s, "cBound": c_bound},
        "status": "pass" if not failures else "fail",
        "counterexample": sorted(set(failures))[:4] or None,
        "dimensions": {m: len(positive_slice(s, m)) for m in range(1, c_bound + 1)},
    }


def _vec_of_affine(x: F2Sum, slice_index: dict) -> int:
    v = 0
    for w in x:
        v ^= 1 << slice_index[w]
    return v
