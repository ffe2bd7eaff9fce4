"""End actions on curves with designated ray ends.

The monoidal category of crossings acts by appending strands on an unoriented
ray: L(T, S, e^n) = Hom(S, T ⊔ slots) for an outgoing end, R for an incoming
one. This module also builds the twisted-object model of L(-, S, e^n), the
stripping maps κ̂ with the adjunction unit/counit, and the comparison with the
regular nil Hecke bimodules on the line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Frac
from typing import Optional

from .. import hecke
from ..curve import (Arc, Component, CurveModel, PathClass, XiEnd, ZPoint,
                     compose_paths, const_path, cover_path, dst, reg, src)
from ..f2core import F2Sum
from ..strands import (Braid, braid_length, chi, differential, hom_braids,
                       identity_braid, make_braid, mu, strand_product, targets)


@dataclass(frozen=True)
class XiContext:
    """A curve with a marked object set and named ray ends."""

    curve: CurveModel
    M: tuple  # ZPoints, sorted

    def xi(self, name: str) -> XiEnd:
        for x in self.curve.xi_ends:
            if x.name == name:
                return x
        raise KeyError(name)

    def slot(self, name: str, k: int) -> ZPoint:
        """The k-th slot point of a ray end (k >= 1)."""
        return reg(self.xi(name).comp, self.xi(name).slot(k))

    def slots(self, name: str, n: int) -> tuple:
        return tuple(self.slot(name, k) for k in range(1, n + 1))


def line_context(mark_coords, oriented_middle: bool = False,
                 ends: str = "+-") -> XiContext:
    """A single line with marks in (-1, 1) and ray ends named xi+ / xi-."""
    arcs = (Arc(Frac(-1, 2), Frac(1, 2), 1),) if oriented_middle else ()
    comp = Component("line", arcs, 0)
    ids = tuple(f"m{i}" for i in range(len(mark_coords)))
    pos = tuple((0, Frac(x)) for x in mark_coords)
    xis = []
    if "+" in ends:
        xis.append(XiEnd("xi+", 0, 1, Frac(0)))
    if "-" in ends:
        xis.append(XiEnd("xi-", 0, -1, Frac(0)))
    curve = CurveModel((comp,), ids, pos, (), tuple(sorted(xis)))
    M = tuple(sorted((curve.project(0, Frac(x)) for x in mark_coords),
                     key=lambda z: z.key()))
    return XiContext(curve, M)


# ---------------------------------------------------------------------------
# the monoidal category as strands on a ray


def ray_points(n: int) -> tuple:
    return tuple(reg(0, Frac(i)) for i in range(1, n + 1))


def ray_curve() -> CurveModel:
    return CurveModel((Component("line", ()),), (), (), ())


def braid_of_perm(curve: CurveModel, points: tuple, w: hecke.Perm) -> Braid:
    """The braid on the listed points realizing a permutation."""
    asg = {}
    for i, z in enumerate(points, start=1):
        t = points[w(i) - 1]
        if t == z:
            asg[z] = const_path(curve, z)
        else:
            asg[z] = cover_path(curve, z.comp, z.coord, t.coord)
    return make_braid(curve, asg)


def perm_of_braid(curve: CurveModel, points: tuple, b: Braid) -> hecke.Perm:
    look = {z.key(): i for i, z in enumerate(points, start=1)}
    ch = chi(curve, b)
    return hecke.Perm(tuple(look[ch[z].key()] for z in points))


def u_category(n: int) -> dict:
    """End(e^n) = H_n, verified against the strands realization on a ray."""
    curve = ray_curve()
    pts = ray_points(n)
    homs = hom_braids(curve, pts, pts, 0)
    failures = []
    if len(homs) != len(list(hecke.all_perms(n))):
        failures.append(f"dimension {len(homs)} != {n}!")
    for g in homs:
        for f in homs:
            gf = strand_product(curve, g, f)
            expect = hecke.basis_mul(perm_of_braid(curve, pts, g),
                                     perm_of_braid(curve, pts, f))
            got = perm_of_braid(curve, pts, gf) if gf is not None else None
            if got != expect:
                failures.append(f"product mismatch at {g}, {f}")
    for g in homs:
        dg = F2Sum(perm_of_braid(curve, pts, x) for x in differential(curve, g))
        if dg != hecke.basis_d(perm_of_braid(curve, pts, g)):
            failures.append(f"differential mismatch at {g}")
    return {
        "check": "u_category",
        "parameters": {"n": n},
        "status": "pass" if not failures else "fail",
        "counterexample": failures[:3] or None,
        "dimension": len(homs),
    }


# ---------------------------------------------------------------------------
# left/right end actions


def L_hom(ctx: XiContext, T, S, n: int, winding: int = 0) -> list:
    """Basis of L(T, S, e^n) = Hom(S, T ⊔ {ξ+(1..n)})."""
    return hom_braids(ctx.curve, tuple(S), tuple(T) + ctx.slots("xi+", n), winding)


def R_hom(ctx: XiContext, S, T, n: int, winding: int = 0) -> list:
    """Basis of R(S, T, e^n) = Hom(T ⊔ {ξ-(-1..-n)}, S)."""
    return hom_braids(ctx.curve, tuple(T) + ctx.slots("xi-", n), tuple(S), winding)


def xi_braid(ctx: XiContext, name: str, n: int, w: hecke.Perm) -> Braid:
    """ξ(T_w): the permutation braid on the first n slots of a ray end."""
    return braid_of_perm(ctx.curve, ctx.slots(name, n), w)


def boxtimes(curve: CurveModel, a: Braid, b: Braid) -> Braid:
    """Disjoint union of strand families (sources must be disjoint)."""
    return make_braid(curve, {**dict(a.strands), **dict(b.strands)})


def act_left(ctx: XiContext, beta: Braid, alpha: Braid, w: hecke.Perm,
             x: Braid) -> Optional[Braid]:
    """L(β, α, T_w)(x) = (β ⊠ ξ(σ))·x·α; zero propagates as None."""
    n = w.n
    big = boxtimes(ctx.curve, beta, xi_braid(ctx, "xi+", n, w))
    y = strand_product(ctx.curve, big, x)
    if y is None:
        return None
    return strand_product(ctx.curve, y, alpha)


def act_right(ctx: XiContext, beta: Braid, alpha: Braid, w: hecke.Perm,
              x: Braid) -> Optional[Braid]:
    """R(β, α, T_w)(x) = β·x·(α ⊠ ξ(σ^{rev-opp}))."""
    n = w.n
    wr = hecke.iota_n(w.inv())  # rev then opp on the crossing generators
    big = boxtimes(ctx.curve, alpha, braid_of_perm(ctx.curve, ctx.slots("xi-", n), wr))
    y = strand_product(ctx.curve, x, big)
    if y is None:
        return None
    return strand_product(ctx.curve, beta, y)


# ---------------------------------------------------------------------------
# twisted-object description of L(-, S, e^n)


def positive_class(ctx: XiContext, p: PathClass) -> bool:
    """Same orientation as ξ+([1 -> 2])."""
    xi = ctx.xi("xi+")
    return (not p.is_const) and p.comp == xi.comp and p.disp * xi.side > 0


def g_map(ctx: XiContext, S: tuple, Spp: tuple, zeta: PathClass, alpha: Braid):
    """g_{S'',ζ}(α): the connection map of the twisted-object model.

    Returns (new_alpha, u_braid) where u = id ⊠ ζ on S∖S', or None.
    """
    curve = ctx.curve
    spp_keys = {z.key() for z in Spp}
    s2 = src(curve, zeta)
    s1 = dst(curve, zeta)
    assert s2.key() in spp_keys and s1.key() not in spp_keys
    a_s2 = alpha.strand(s2)
    moved = compose_paths(curve, a_s2, zeta.inverse())
    if moved is None:
        return None
    # second condition: splittings through another slot-bound point must
    # transport to a negative class
    for s in Spp:
        if s == s2:
            continue
        for (c, x, d) in ((zeta.comp, zeta.start, zeta.disp),):
            for (cs, xs) in curve.lifts(s):
                if cs != c:
                    continue
                circle = curve.components[c].kind == "circle"
                # ζ'' : s2 -> s with ζ = ζ' ∘ ζ'', both positive
                if circle:
                    raise NotImplementedError("slot rays live on lines")
                e2 = xs - x
                if e2 == 0 or (e2 > 0) != (d > 0):
                    continue
                rest = d - e2
                if rest == 0 or (rest > 0) != (d > 0):
                    continue
                zeta2 = cover_path(curve, c, x, xs)
                cand = compose_paths(curve, a_s2, zeta2.inverse())
                if cand is None:
                    continue
                a_s = alpha.strand(s)
                back = compose_paths(curve, cand, a_s.inverse())
                if back is None:
                    continue
                if positive_class(ctx, back):
                    return None
    new_asg = {z: p for z, p in alpha.strands if z != s2}
    new_asg[s1] = moved
    new_alpha = make_braid(curve, new_asg)
    return new_alpha


def decompose(ctx: XiContext, T: tuple, S: tuple, n: int, winding: int = 0) -> dict:
    """Verify V_n(S)(T) ≅ L(T, S, e^n) including differentials, and d_V² = 0.

    The summands are Hom(S', slots) ∧ Hom(S∖S', T) over n-element S' ⊆ S; the
    twisted differential adds the connection maps over positive classes.
    """
    curve = ctx.curve
    slots = ctx.slots("xi+", n)
    failures = []
    summands = []  # (S', basis pairs)
    for comb in itertools.combinations(range(len(S)), n):
        Sp = tuple(S[i] for i in comb)
        rest = tuple(z for i, z in enumerate(S) if i not in comb)
        for a in hom_braids(curve, Sp, slots, winding):
            for b in hom_braids(curve, rest, tuple(T), winding):
                summands.append((Sp, a, b))

    def to_L(item):
        Sp, a, b = item
        return boxtimes(curve, a, b)

    native = {x.key(): x for x in L_hom(ctx, T, S, n, winding)}
    got = {}
    for item in summands:
        x = to_L(item)
        if x.key() in got:
            failures.append(f"decomposition not injective at {x}")
        got[x.key()] = item
    if set(got) != set(native):
        failures.append("decomposition misses basis elements")

    def dV(item) -> F2Sum:
        Sp, a, b = item
        acc = F2Sum()
        for da in differential(curve, a):
            acc = acc + F2Sum.of((Sp, da, b))
        for db in differential(curve, b):
            acc = acc + F2Sum.of((Sp, a, db))
        rest = tuple(z for z in S if z not in Sp)
        for s2 in Sp:
            for s1 in rest:
                for (c2, x2) in curve.lifts(s2):
                    for (c1, x1) in curve.lifts(s1):
                        if c1 != c2 or c1 != ctx.xi("xi+").comp:
                            continue
                        if (x1 - x2) * ctx.xi("xi+").side <= 0:
                            continue
                        zeta = cover_path(curve, c1, x2, x1)
                        res = g_map(ctx, S, Sp, zeta, a)
                        if res is None:
                            continue
                        u = make_braid(curve, {
                            **{z: const_path(curve, z) for z in rest if z != s1},
                            s2: zeta})
                        ub = strand_product(curve, b, u.restrict(
                            [z for z in rest if z != s1] + [s2]))
                        if ub is None:
                            continue
                        newSp = tuple(sorted((set(Sp) - {s2}) | {s1},
                                             key=lambda z: z.key()))
                        acc = acc + F2Sum.of((newSp, res, ub))
        return acc

    # transported differential equals the native one; d_V^2 = 0
    for item in summands:
        x = to_L(item)
        lhs = F2Sum(to_L(i) for i in dV(item))
        rhs = differential(curve, x)
        if lhs != rhs:
            failures.append(f"d_V mismatch at {item}")
        dd = F2Sum()
        for i in dV(item):
            dd = dd + dV(i)
        if dd:
            failures.append(f"d_V^2 != 0 at {item}")
    return {
        "check": "decompose",
        "parameters": {"T": [z.key() for z in T], "S": [z.key() for z in S], "n": n},
        "status": "pass" if not failures else "fail",
        "counterexample": failures[:3] or None,
        "dimension": len(summands),
    }


# ---------------------------------------------------------------------------
# duality


def kappa_strip(ctx: XiContext, n: int, b: Braid, plus: str = "xi+",
                minus: str = "xi-") -> Optional[Braid]:
    """κ_n: strip the strands ξ-(-i) -> ξ+(i) for i <= n; zero otherwise."""
    curve = ctx.curve
    ch = chi(curve, b)
    keep = {}
    for i in range(1, n + 1):
        lo = ctx.slot(minus, i)
        hi = ctx.slot(plus, i)
        if ch.get(lo) != hi:
            return None
    strip = {ctx.slot(minus, i).key() for i in range(1, n + 1)}
    for z, p in b.strands:
        if z.key() not in strip:
            keep[z] = p
    return make_braid(curve, keep)


def kappa_sum(ctx: XiContext, n: int, xs: F2Sum) -> F2Sum:
    acc = F2Sum()
    for b in xs:
        k = kappa_strip(ctx, n, b)
        if k is not None:
            acc = acc + F2Sum.of(k)
    return acc


def pairing(ctx: XiContext, n: int, theta_l: Braid, theta_r: Braid) -> Optional[Braid]:
    """κ_n(θ'·θ) for θ' in L(T,S,e^n) and θ in R(S,T',e^n)."""
    prod = strand_product(ctx.curve, theta_l, theta_r)
    if prod is None:
        return None
    return kappa_strip(ctx, n, prod)


def duality_matrix(ctx: XiContext, T, S, n: int, winding: int = 0) -> dict:
    """The κ̂ pairing matrix between L(T,S,e^n) and R(S,T',e^n) bases.

    Entries live in Hom(T', T); the report flags whether κ̂ is injective onto
    the dual basis (full row rank over all T' of matching size).
    """
    curve = ctx.curve
    Ls = L_hom(ctx, T, S, n, winding)
    failures = []
    columns = []  # (T', R-basis element, hom value index)
    rows = {x.key(): i for i, x in enumerate(Ls)}
    size = len(S) - n
    tprimes = [tuple(c) for c in itertools.combinations(ctx.M, size)]
    matrix = {}
    for tp in tprimes:
        Rs = R_hom(ctx, S, tp, n, winding)
        for r_i, theta in enumerate(Rs):
            for l_i, theta_l in enumerate(Ls):
                val = pairing(ctx, n, theta_l, theta)
                if val is not None:
                    matrix[(l_i, (tp, r_i))] = val
            columns.append((tp, r_i))
    # injectivity of κ̂ over GF(2): rows indexed by (column, hom-value) pairs
    from ..gf2 import BitBasis
    value_index = {}
    for val in matrix.values():
        value_index.setdefault(val.key(), len(value_index))
    stride = max(1, len(value_index))
    basis = BitBasis()
    rank = 0
    for l_i in range(len(Ls)):
        vec = 0
        for c_i, col in enumerate(columns):
            val = matrix.get((l_i, col))
            if val is not None:
                vec ^= 1 << (c_i * stride + value_index[val.key()])
        if basis.insert(vec):
            rank += 1
    if rank != len(Ls):
        failures.append(f"kappa-hat not injective: rank {rank} of {len(Ls)}")
    return {
        "check": "duality_matrix",
        "parameters": {"T": [z.key() for z in T], "S": [z.key() for z in S], "n": n},
        "status": "pass" if not failures else "fail",
        "counterexample": failures[:3] or None,
        "dim_L": len(Ls),
        "rank": rank,
    }


def _xi_tilde_path(ctx: XiContext, x: ZPoint, y: ZPoint) -> PathClass:
    if x == y:
        return const_path(ctx.curve, x)
    return cover_path(ctx.curve, x.comp, x.coord, y.coord)


def unit_of_adjunction(ctx: XiContext, gamma: Braid) -> list:
    """η(γ) = Σ_x (γ|.. ⊠ ξ̃([-1→x])) ⊗ (id ⊠ ξ̃([x→1])) over x in ξ̃^{-1}(S).

    ``gamma`` lies in Hom(S, T); returns a list of pure tensors (r, l) with
    r in R(T, S∖{x}) and l in L(S∖{x}, S).
    """
    curve = ctx.curve
    xi_comp = ctx.xi("xi+").comp
    out = []
    for z, p in gamma.strands:
        if z.kind != "reg" or z.comp != xi_comp:
            continue
        rest = [w for w, _ in gamma.strands if w != z]
        r = boxtimes(curve, gamma.restrict(rest),
                     make_braid(curve, {ctx.slot("xi-", 1):
                                        _xi_tilde_path(ctx, ctx.slot("xi-", 1), z)}))
        l = boxtimes(curve, identity_braid(curve, rest),
                     make_braid(curve, {z: _xi_tilde_path(ctx, z, ctx.slot("xi+", 1))}))
        out.append((r, l))
    return out


def zigzag_check(ctx: XiContext, S, T, winding: int = 0) -> dict:
    """Both triangle identities for the (L⊗-, R⊗-) adjunction at n = 1."""
    curve = ctx.curve
    failures = []
    # identity on R(T, S): γ ↦ mult∘(id ⊗ ε)∘(η ⊗ id)(γ)
    for gamma in R_hom(ctx, T, S, 1, winding):
        acc = F2Sum()
        for (r, l) in unit_of_adjunction(ctx, identity_braid(curve, T)):
            prod = strand_product(curve, l, gamma)
            if prod is None:
                continue
            eps = kappa_strip(ctx, 1, prod)
            if eps is None:
                continue
            final = strand_product(
                curve, r, boxtimes(curve, eps, identity_braid(
                    curve, [ctx.slot("xi-", 1)])))
            if final is not None:
                acc = acc + F2Sum.of(final)
        if acc != F2Sum.of(gamma):
            failures.append(f"R zigzag fails at {gamma}")
    # identity on L(T, S): δ ↦ mult∘(ε ⊗ id)∘(id ⊗ η)(δ)
    for delta in L_hom(ctx, T, S, 1, winding):
        acc = F2Sum()
        for (r, l) in unit_of_adjunction(ctx, identity_braid(curve, S)):
            prod = strand_product(curve, delta, r)
            if prod is None:
                continue
            eps = kappa_strip(ctx, 1, prod)
            if eps is None:
                continue
            final = strand_product(
                curve, boxtimes(curve, eps, identity_braid(
                    curve, [ctx.slot("xi+", 1)])), l)
            if final is not None:
                acc = acc + F2Sum.of(final)
        if acc != F2Sum.of(delta):
            failures.append(f"L zigzag fails at {delta}")
    return {
        "check": "zigzag",
        "parameters": {"S": [z.key() for z in S], "T": [z.key() for z in T]},
        "status": "pass" if not failures else "fail",
        "counterexample": failures[:3] or None,
    }


# ---------------------------------------------------------------------------
# the line reproduces the regular bimodules


def line_phi(curve: CurveModel, b: Braid) -> hecke.Perm:
    """Φ: braid on a line through increasing point labels to a permutation."""
    pts = tuple(sorted((z for z, _ in b.strands), key=lambda z: z.coord))
    tgts = tuple(sorted((dst(curve, p) for _, p in b.strands),
                        key=lambda z: z.coord))
    look = {z.key(): i for i, z in enumerate(tgts, start=1)}
    ch = chi(curve, b)
    return hecke.Perm(tuple(look[ch[z].key()] for z in pts))


def line_bimodule_check(r: int, n: int) -> dict:
    """L_{ξ±}/R_{ξ±} on the unoriented line match L±(r,n)/R±(r,n).

    Generator-level table comparison under Φ: the slot braid of T_i acts as
    the H_n-factor element ι_n(T_i) = T_{n-i}, the H_r factor and the outer
    H_{r+n} factor act untwisted.
    """
    m = r + n
    marks = [Frac(2 * i - 1, 2 * m + 1) - Frac(1, 2) for i in range(1, m + 1)]
    ctx = line_context(marks)
    curve = ctx.curve
    S = ctx.M
    T = tuple(S[:r])
    failures = []
    e_r = hecke.elem("H", r, hecke.identity_perm(r))
    e_n = hecke.elem("H", n, hecke.identity_perm(n))
    gens_r = [hecke.simple(r, j) for j in range(1, r)]
    gens_n = [hecke.simple(n, j) for j in range(1, n)]
    gens_m = [hecke.simple(m, j) for j in range(1, m)]
    for sign in ("+", "-"):
        xiname = "xi" + sign
        slots = ctx.slots(xiname, n)
        basis = hom_braids(curve, S, T + slots, 0)
        if len(basis) != len(list(hecke.all_perms(m))):
            failures.append(f"L{sign}({r},{n}) dimension != {m}!")
        rbasis = hom_braids(curve, T + slots, S, 0)

        def expect_L(hr, hn, x, outer):
            return hecke.pair_action(
                "L" + sign, r, n, hecke.elem("H", r, hr) if hr else e_r,
                hecke.elem("H", n, hn) if hn else e_n,
                hecke.elem("H", m, line_phi(curve, x)),
                hecke.elem("H", m, outer if outer else hecke.identity_perm(m))).sum

        def got_sum(y):
            return F2Sum.of(line_phi(curve, y)) if y is not None else F2Sum()

        for x in basis:
            for w in gens_n:  # slot braid of T_i acts as ι_n(T_i)
                big = braid_of_perm(curve, slots, w)
                big = boxtimes(curve, identity_braid(curve, T), big)
                y = strand_product(curve, big, x)
                if got_sum(y) != expect_L(None, hecke.iota_n(w), x, None):
                    failures.append(f"L{sign} slot action mismatch")
            for w in gens_r:
                big = boxtimes(curve, braid_of_perm(curve, T, w),
                               identity_braid(curve, slots))
                y = strand_product(curve, big, x)
                if got_sum(y) != expect_L(w, None, x, None):
                    failures.append(f"L{sign} H_r action mismatch")
            for w in gens_m:
                y = strand_product(curve, x, braid_of_perm(curve, S, w))
                if got_sum(y) != expect_L(None, None, x, w):
                    failures.append(f"L{sign} outer action mismatch")
        for x in rbasis:
            for w in gens_n:
                big = boxtimes(curve, identity_braid(curve, T),
                               braid_of_perm(curve, slots, w))
                y = strand_product(curve, x, big)
                expect = hecke.pair_action(
                    "R" + sign, r, n, e_r, hecke.elem("H", n, hecke.iota_n(w)),
                    hecke.elem("H", m, line_phi(curve, x)),
                    hecke.elem("H", m, hecke.identity_perm(m))).sum
                if got_sum(y) != expect:
                    failures.append(f"R{sign} slot action mismatch")
            for w in gens_m:
                y = strand_product(curve, braid_of_perm(curve, S, w), x)
                expect = hecke.mult(hecke.elem("H", m, w),
                                    hecke.elem("H", m, line_phi(curve, x))).sum
                if got_sum(y) != expect:
                    failures.append(f"R{sign} outer action mismatch")
    return {
        "check": "line_bimodules",
        "parameters": {"r": r, "n": n},
        "status": "pass" if not failures else "fail",
        "counterexample": sorted(set(failures))[:3] or None,
    }
