"""Gluing an outgoing and an incoming ray end, and the comparison map.

The glued curve replaces the two rays by an oriented bridge (a circle when a
component is glued to itself). Elements of G_n(T,S) = Hom(S ⊔ ξ2-slots,
T ⊔ ξ1-slots) map to Hom(S,T) of the glued curve by routing slot pairs
through the bridge (the map q); the gluing theorem identifies classes exactly
along the T_i-sliding relation, with canonical representatives produced by
greedy factorization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Frac
from typing import Optional

from .. import hecke
from ..curve import (Arc, Component, CurveModel, PathClass, XiEnd, ZPoint,
                     compose_paths, const_path, cover_path, dst,
                     intersection_count, reg, src)
from ..f2core import F2Sum
from ..strands import (Braid, chi, cut_at_first, differential, factorize,
                       hom_braids, identity_braid, make_braid, mu, mu_path,
                       strand_product)
from .actions import XiContext, boxtimes, braid_of_perm


@dataclass(frozen=True)
class GlueContext:
    """A curve with an outgoing end xi1 (+ side) and an incoming end xi2 (-)."""

    ctx: XiContext
    xi1: str = "xi1"
    xi2: str = "xi2"

    @property
    def curve(self) -> CurveModel:
        return self.ctx.curve

    @property
    def M(self) -> tuple:
        return self.ctx.M

    def slot_plus(self, k: int) -> ZPoint:
        return self.ctx.slot(self.xi1, k)

    def slot_minus(self, k: int) -> ZPoint:
        return self.ctx.slot(self.xi2, k)


@dataclass(frozen=True)
class GluedData:
    """The glued curve plus the piecewise-affine coordinate change."""

    glue: GlueContext
    zcurve: CurveModel
    z0: ZPoint
    cap: int
    comp_map: dict
    self_glued: bool
    base1: Frac
    base2: Frac
    circ: Frac  # circumference units C (self-glued case only)

    # -- point maps ----------------------------------------------------------

    def psi(self, comp: int, x: Frac) -> tuple:
        g = self.glue
        c1 = g.ctx.xi(g.xi1).comp
        c2 = g.ctx.xi(g.xi2).comp
        if self.self_glued:
            if comp != c1:
                return (self.comp_map[comp], x)
            if x > self.base2 - 1:
                return (0, ((x - self.base2 + 2) / self.circ) % 1)
            return (0, ((x - self.base2) / self.circ) % 1)
        if comp == c2:
            return (0, x + self.base1 + 2 * self.cap + 4 - self.base2)
        if comp == c1:
            return (0, x)
        return (self.comp_map[comp], x)

    def inv_point(self, comp: int, x: Frac) -> tuple:
        g = self.glue
        c1 = g.ctx.xi(g.xi1).comp
        c2 = g.ctx.xi(g.xi2).comp
        if self.self_glued:
            if comp != 0:
                for oc, nc in self.comp_map.items():
                    if nc == comp:
                        return (oc, x)
                raise KeyError(comp)
            u = (x % 1) * self.circ
            span = self.base1 - self.base2
            if u <= span + self.cap + 3:
                return (c1, u - 2 + self.base2)
            if u >= span + self.cap + 5:
                return (c1, u - self.circ + self.base2)
            raise ValueError("point lies on the glued bridge")
        if comp == 0:
            if x <= self.base1 + self.cap + 1:
                return (c1, x)
            if x >= self.base1 + self.cap + 3:
                return (c2, x - (self.base1 + 2 * self.cap + 4 - self.base2))
            raise ValueError("point lies on the glued bridge")
        for oc, nc in self.comp_map.items():
            if nc == comp and oc not in (c1, c2):
                return (oc, x)
        raise KeyError(comp)

    def psi_point(self, z: ZPoint) -> ZPoint:
        if z.kind == "sing":
            return z
        c, x = self.psi(z.comp, z.coord)
        return self.zcurve.project(c, x)

    # -- path maps -----------------------------------------------------------

    def glued_path(self, p: PathClass) -> PathClass:
        """Image of a monotone class (total travel under one glued turn)."""
        if p.is_const:
            return const_path(self.zcurve, self.psi_point(p.const_at))
        c0, x0 = self.psi(p.comp, p.start)
        c1x, x1 = self.psi(p.comp, p.start + p.disp)
        if self.zcurve.components[c0].kind == "circle":
            d = (x1 - x0) % 1
            if p.disp < 0:
                d -= 1
            assert d != 0
        else:
            d = x1 - x0
        return cover_path(self.zcurve, c0, x0, x0 + d)

    def glued_braid(self, b: Braid) -> Braid:
        curve = self.glue.curve
        return make_braid(self.zcurve, {self.psi_point(src(curve, p)):
                                        self.glued_path(p) for _, p in b.strands})

    def inv_path(self, p: PathClass) -> PathClass:
        """Preimage of a class supported away from the open bridge middle."""
        curve = self.glue.curve
        if p.is_const:
            z = p.const_at
            if z.kind == "sing":
                return const_path(curve, z)
            c, x = self.inv_point(z.comp, z.coord)
            return const_path(curve, curve.project(c, x))
        circ = self.zcurve.components[p.comp].kind == "circle"
        c0, x0 = self.inv_point(p.comp, p.start % 1 if circ else p.start)
        c1, x1 = self.inv_point(p.comp, p.end % 1 if circ else p.end)
        assert c0 == c1, "path preimage crosses the glued bridge"
        out = cover_path(curve, c0, x0, x1)
        assert self.glued_path(out).key() == p.key(), "pullback roundtrip failed"
        return out

    def plus_pos(self, k: int) -> Frac:
        xi = self.glue.ctx.xi(self.glue.xi1)
        return self.psi(xi.comp, xi.slot(k))[1]

    def minus_pos(self, k: int) -> Frac:
        xi = self.glue.ctx.xi(self.glue.xi2)
        return self.psi(xi.comp, xi.slot(k))[1]


def glued_model(glue: GlueContext, cap: int) -> GluedData:
    """Build the glued curve with slot capacity ``cap`` per side.

    Self-gluing layout on a circle of circumference C = span + 2·cap + 6
    (positions in C-units before scaling): gap(2), component span, + slots,
    gap(1), oriented bridge(2), gap(1), - slots, gap(1). The line layout
    keeps the ξ1 component in place and shifts the ξ2 component past the
    bridge.
    """
    curve = glue.curve
    xi1 = glue.ctx.xi(glue.xi1)
    xi2 = glue.ctx.xi(glue.xi2)
    if xi1.side != 1 or xi2.side != -1:
        raise ValueError("glue an outgoing + end to an incoming - end")
    self_glued = xi1.comp == xi2.comp
    comp_map = {}
    nxt = 1
    for cidx in range(len(curve.components)):
        if cidx == xi1.comp:
            comp_map[cidx] = 0
        elif cidx == xi2.comp and not self_glued:
            comp_map[cidx] = 0
        else:
            comp_map[cidx] = nxt
            nxt += 1
    if self_glued:
        span = xi1.base - xi2.base
        if span < 0:
            raise ValueError("crossed ray bases on a self-glued component")
        if any(x.name not in (xi1.name, xi2.name) and x.comp == xi1.comp
               for x in curve.xi_ends):
            raise ValueError("self-glued component has further ray ends")
        C = span + 2 * cap + 6
        scale = Frac(1, C)
        a_old = curve.components[xi1.comp]
        arcs = [Arc((a.lo - xi2.base + 2) * scale, (a.hi - xi2.base + 2) * scale,
                    a.direction) for a in a_old.arcs]
        arcs.append(Arc((span + cap + 3) * scale, (span + cap + 5) * scale, 1))
        comps = [Component("circle", tuple(sorted(arcs)), 0)]
        z0 = reg(0, (span + cap + 4) * scale)
        circ = Frac(C)
    else:
        a_old = curve.components[xi1.comp]
        b_old = curve.components[xi2.comp]
        shift_b = xi1.base + 2 * cap + 4 - xi2.base
        arcs = list(a_old.arcs)
        arcs.append(Arc(xi1.base + cap + 1, xi1.base + cap + 3, 1))
        arcs += [Arc(a.lo + shift_b, a.hi + shift_b, a.direction)
                 for a in b_old.arcs]
        comps = [Component("line", tuple(sorted(arcs)), 0)]
        z0 = reg(0, xi1.base + cap + 2)
        circ = Frac(0)
    for cidx in range(len(curve.components)):
        if cidx not in (xi1.comp, xi2.comp) or (self_glued and cidx != xi1.comp):
            comps.append(curve.components[cidx])
    data = GluedData(glue, None, z0, cap, comp_map, self_glued,
                     xi1.base, xi2.base, circ)
    mark_pos = tuple(data.psi(c, x) for (c, x) in curve.mark_pos)
    keep_ends = tuple(XiEnd(x.name, comp_map[x.comp], x.side,
                            data.psi(x.comp, x.base)[1])
                      for x in curve.xi_ends
                      if x.name not in (xi1.name, xi2.name))
    zcurve = CurveModel(tuple(comps), curve.mark_ids, mark_pos,
                        curve.matching, keep_ends)
    return GluedData(glue, zcurve, z0, cap, comp_map, self_glued,
                     xi1.base, xi2.base, circ)


# ---------------------------------------------------------------------------
# the bimodules E_{m,n}, the T_i actions and ∗


def E_hom(glue: GlueContext, T, S, m: int, n: int, winding: int = 0) -> list:
    """Basis of E_{m,n}(T,S) = Hom(S ⊔ ξ2(-n..-1), T ⊔ ξ1(1..m))."""
    src_pts = tuple(S) + tuple(glue.slot_minus(k) for k in range(1, n + 1))
    tgt_pts = tuple(T) + tuple(glue.slot_plus(k) for k in range(1, m + 1))
    return hom_braids(glue.curve, src_pts, tgt_pts, winding)


def in_A(glue: GlueContext, b: Braid, n: int) -> bool:
    """Every ξ2-slot strand lands in T or a strictly shallower ξ1 slot."""
    ch = chi(glue.curve, b)
    plus = {glue.slot_plus(j).key(): j for j in range(1, n + 1)}
    for i in range(1, n + 1):
        j = plus.get(ch[glue.slot_minus(i)].key())
        if j is not None and j > n - i:
            return False
    return True


def in_E(glue: GlueContext, b: Braid, n: int) -> bool:
    """A_n with no crossings among the ξ2-slot strands."""
    if not in_A(glue, b, n):
        return False
    pts = [glue.slot_minus(i) for i in range(1, n + 1)]
    return not any(intersection_count(glue.curve, b.strand(p1), b.strand(p2))
                   for p1, p2 in itertools.combinations(pts, 2))


def in_F(glue: GlueContext, b: Braid, n: int) -> bool:
    """A_n with no crossings among the strands targeting ξ1 slots."""
    if not in_A(glue, b, n):
        return False
    ch = chi(glue.curve, b)
    slot_tgts = {glue.slot_plus(j).key() for j in range(1, n + 1)}
    srcs = [z for z, _ in b.strands if ch[z].key() in slot_tgts]
    return not any(intersection_count(glue.curve, b.strand(z1), b.strand(z2))
                   for z1, z2 in itertools.combinations(srcs, 2))


def t_left(glue: GlueContext, i: int, n: int, b: Braid) -> Optional[Braid]:
    """T_i·σ: cross the ξ1 slots i, i+1 on the left."""
    tgt = sorted({dst(glue.curve, p) for _, p in b.strands},
                 key=lambda z: z.key())
    pair = (glue.slot_plus(i), glue.slot_plus(i + 1))
    others = [z for z in tgt if z not in pair]
    cross = braid_of_perm(glue.curve, pair, hecke.simple(2, 1))
    big = boxtimes(glue.curve, identity_braid(glue.curve, others), cross)
    return strand_product(glue.curve, big, b)


def t_right(glue: GlueContext, i: int, n: int, b: Braid) -> Optional[Braid]:
    """σ·T_i: cross the ξ2 slots n-i, n-i+1 on the right."""
    j = n - i
    srcs = sorted((z for z, _ in b.strands), key=lambda z: z.key())
    pair = (glue.slot_minus(j), glue.slot_minus(j + 1))
    others = [z for z in srcs if z not in pair]
    cross = braid_of_perm(glue.curve, pair, hecke.simple(2, 1))
    big = boxtimes(glue.curve, identity_braid(glue.curve, others), cross)
    return strand_product(glue.curve, b, big)


def star(glue: GlueContext, a: Braid, mn_a: tuple, b: Braid,
         mn_b: tuple) -> Optional[Braid]:
    """a ∗ b for a in E_{m,n}, b in E_{m',n'} (lands in E_{m+m',n+n'})."""
    curve = glue.curve
    m, n = mn_a
    mp, np_ = mn_b
    left = a
    if mp:
        shift_up = {glue.slot_plus(i): cover_path(
            curve, glue.slot_plus(i).comp, glue.slot_plus(i).coord,
            glue.slot_plus(i + m).coord) for i in range(1, mp + 1)}
        left = boxtimes(curve, a, make_braid(curve, shift_up))
    right = b
    if n:
        shift_dn = {glue.slot_minus(np_ + i): cover_path(
            curve, glue.slot_minus(np_ + i).comp,
            glue.slot_minus(np_ + i).coord,
            glue.slot_minus(i).coord) for i in range(1, n + 1)}
        right = boxtimes(curve, b, make_braid(curve, shift_dn))
    return strand_product(curve, left, right)


# ---------------------------------------------------------------------------
# the gluing map q


def _bridge_path(gd: GluedData, r: int, k: int) -> PathClass:
    """[r -> -k]: from the glued ξ1 slot r through the bridge to ξ2 slot -k."""
    x0 = gd.plus_pos(r)
    x1 = gd.minus_pos(k)
    if gd.zcurve.components[0].kind == "circle":
        d = (x1 - x0) % 1
        assert 0 < d < 1
        return cover_path(gd.zcurve, 0, x0, x0 + d)
    return cover_path(gd.zcurve, 0, x0, x1)


def q_map(gd: GluedData, b: Braid, n: int) -> Optional[Braid]:
    """q: G_n(T,S) -> Hom(S, T) of the glued curve (zero on B_n)."""
    glue = gd.glue
    curve = glue.curve
    if not in_A(glue, b, n):
        return None
    ch = chi(curve, b)
    minus = [glue.slot_minus(i) for i in range(1, n + 1)]
    plus = {glue.slot_plus(j).key(): j for j in range(1, n + 1)}
    S = [z for z, _ in b.strands if z not in minus]
    gb = gd.glued_braid(b)
    cur = make_braid(gd.zcurve, {gd.psi_point(z): gb.strand(gd.psi_point(z))
                                 for z in S})
    I_m = sorted(j for z in S if (j := plus.get(ch[z].key())) is not None)
    for _ in range(n):
        if cur is None:
            return None
        step = {dst(gd.zcurve, p): const_path(gd.zcurve, dst(gd.zcurve, p))
                for _, p in cur.strands}
        nxt = []
        for r in I_m:
            gp = gd.zcurve.project(0, gd.plus_pos(r))
            back = glue.slot_minus(n + 1 - r)
            cont = compose_paths(gd.zcurve, gb.strand(gd.psi_point(back)),
                                 _bridge_path(gd, r, n + 1 - r))
            assert cont is not None, "bridge routing not admissible"
            step[gp] = cont
            j = plus.get(ch[back].key())
            if j is not None:
                nxt.append(j)
        beta = make_braid(gd.zcurve, step)
        cur = strand_product(gd.zcurve, beta, cur)
        I_m = sorted(nxt)
    return cur


# ---------------------------------------------------------------------------
# canonical representatives (le:qsurj induction)


def rep_of(gd: GluedData, theta: Braid) -> Braid:
    """An F_n ∩ C_n representative with q(rep) = θ (n = μ(θ))."""
    glue = gd.glue
    curve = glue.curve
    zc = gd.zcurve
    n = mu(zc, gd.z0, theta)
    if n == 0:
        return make_braid(curve, {src(curve, q): q for q in
                                  (gd.inv_path(p) for _, p in theta.strands)})
    if n == 1:
        schoice = next((z, p) for z, p in theta.strands
                       if mu_path(zc, gd.z0, p) == 1)
        z, p = schoice
        head, tail = cut_at_first(zc, p, [gd.z0])
        if tail is None:
            tail = const_path(zc, dst(zc, head))
        circle = zc.components[0].kind == "circle"
        pos1 = gd.plus_pos(1)
        if circle:
            lift1 = pos1 + (head.end - pos1).__ceil__() - 1
        else:
            lift1 = pos1
        alpha_s = compose_paths(zc, cover_path(zc, 0, head.end, lift1), head)
        posm = gd.minus_pos(1)
        t0 = head.end
        if circle:
            liftm = posm + (t0 - posm).__floor__() + 1
        else:
            liftm = posm
        if tail.is_const:
            alpha_m = cover_path(zc, 0, liftm, t0)
        else:
            alpha_m = compose_paths(zc, tail, cover_path(zc, 0, liftm, t0))
        assert alpha_s is not None and alpha_m is not None
        asg = {}
        for zz, pp in theta.strands:
            back = gd.inv_path(alpha_s if zz == z else pp)
            asg[src(curve, back)] = back
        am = gd.inv_path(alpha_m)
        asg[src(curve, am)] = am
        return make_braid(curve, asg)
    rprime, r = factorize(zc, glue.M, gd.z0, theta)
    a = rep_of(gd, r)
    b = rep_of(gd, rprime)
    gamma = star(glue, b, (n - 1, n - 1), a, (1, 1))
    assert gamma is not None, "star product of representatives vanished"
    return gamma


# ---------------------------------------------------------------------------
# the comparison report


def glue_check(glue: GlueContext, mu_max: int, winding: int) -> dict:
    """Verify the gluing isomorphism within bounds (see module docstring)."""
    gd = glued_model(glue, mu_max + 1)
    curve = glue.curve
    zc = gd.zcurve
    failures = []
    objs = [tuple(c) for k in range(len(glue.M) + 1)
            for c in itertools.combinations(glue.M, k)]
    reps = {}
    for T in objs:
        for S in objs:
            if len(S) != len(T):
                continue
            glued_homs = hom_braids(zc, tuple(gd.psi_point(z) for z in S),
                                    tuple(gd.psi_point(z) for z in T),
                                    winding, mu_bound=mu_max, z0=gd.z0)
            by_mu = {}
            for th in glued_homs:
                by_mu.setdefault(mu(zc, gd.z0, th), []).append(th)
            for n in range(0, mu_max + 1):
                basis = E_hom(glue, T, S, n, n, winding)
                qval = {}
                for b in basis:
                    v = q_map(gd, b, n)
                    qval[b.key()] = v
                    if v is not None and mu(zc, gd.z0, v) != n:
                        failures.append(f"q image has wrong mu at n={n}")
                # union-find over the T_i-sliding relation, with a zero class
                comp_id = {b.key(): b.key() for b in basis}
                zero_roots = set()

                def root(k):
                    while comp_id[k] != k:
                        comp_id[k] = comp_id[comp_id[k]]
                        k = comp_id[k]
                    return k

                def join(k1, k2):
                    r1, r2 = root(k1), root(k2)
                    if r1 != r2:
                        comp_id[r1] = r2

                for b in basis:
                    if not in_A(glue, b, n):
                        zero_roots.add(b.key())
                    for i in range(1, n):
                        lb = t_left(glue, i, n, b)
                        rb = t_right(glue, i, n, b)
                        if lb is not None and rb is not None:
                            join(lb.key(), rb.key())
                        elif lb is not None:
                            zero_roots.add(lb.key())
                        elif rb is not None:
                            zero_roots.add(rb.key())
                zero_roots = {root(k) for k in zero_roots}
                classes = {}
                for b in basis:
                    r = root(b.key())
                    classes.setdefault(None if r in zero_roots else r,
                                       set()).add(b.key())
                fibers = {}
                for b in basis:
                    v = qval[b.key()]
                    fibers.setdefault(v.key() if v is not None else None,
                                      set()).add(b.key())
                cls_sets = {frozenset(v) for k, v in classes.items()
                            if k is not None}
                fib_sets = {frozenset(v) for k, v in fibers.items()
                            if k is not None}
                if cls_sets != fib_sets:
                    failures.append(f"~ classes != q fibers at n={n} T={T} S={S}")
                if classes.get(None, set()) != fibers.get(None, set()):
                    failures.append(f"zero classes differ at n={n} T={T} S={S}")
                hit = {v.key() for v in qval.values() if v is not None}
                tgt = {t.key() for t in by_mu.get(n, [])}
                if hit != tgt:
                    failures.append(f"q image != mu-{n} stratum at T={T} S={S}")
                for th in by_mu.get(n, []):
                    rep = rep_of(gd, th)
                    reps.setdefault((T, S), []).append((th, rep, n))
                    v = q_map(gd, rep, n)
                    if v is None or v.key() != th.key():
                        failures.append(f"canonical rep roundtrip fails at {th}")
                    if not in_F(glue, rep, n):
                        failures.append(f"canonical rep not in F_n at {th}")
                    qd = F2Sum()
                    for db in differential(curve, rep):
                        v2 = q_map(gd, db, n)
                        if v2 is not None:
                            qd = qd + F2Sum.of(v2)
                    if qd != differential(zc, th):
                        failures.append(f"q does not intertwine d at {th}")
    comp_checked = 0
    for (T1, S1), lst1 in reps.items():
        for (T2, S2), lst2 in reps.items():
            if S2 != T1:
                continue
            for (th1, r1, n1) in lst1:
                for (th2, r2, n2) in lst2:
                    if n1 + n2 > mu_max:
                        continue
                    prod = strand_product(zc, th2, th1)
                    starp = star(glue, r2, (n2, n2), r1, (n1, n1))
                    qs = q_map(gd, starp, n1 + n2) if starp is not None else None
                    pk = prod.key() if prod is not None else None
                    qk = qs.key() if qs is not None else None
                    if pk != qk:
                        failures.append("q(rep∗rep') != q(rep)·q(rep')")
                    comp_checked += 1
    return {
        "check": "glue",
        "parameters": {"mu": mu_max, "winding": winding,
                       "self_glued": gd.self_glued},
        "status": "pass" if not failures else "fail",
        "counterexample": sorted(set(failures))[:5] or None,
        "compositions_checked": comp_checked,
    }


def two_interval_context(mark1=Frac(0), mark2=Frac(0)) -> GlueContext:
    """Two disjoint intervals with oriented middles, glued end to end."""
    comp_a = Component("line", (Arc(Frac(-1, 2), Frac(1, 2), 1),))
    comp_b = Component("line", (Arc(Frac(-1, 2), Frac(1, 2), 1),))
    curve = CurveModel(
        (comp_a, comp_b), ("a", "b"),
        ((0, Frac(mark1)), (1, Frac(mark2))), (),
        (XiEnd("xi1", 0, 1, Frac(0)), XiEnd("xi2", 1, -1, Frac(0))))
    M = tuple(sorted((curve.project(0, Frac(mark1)),
                      curve.project(1, Frac(mark2))), key=lambda z: z.key()))
    return GlueContext(XiContext(curve, M))


def self_glue_context(marks=(Frac(-1, 4), Frac(1, 4))) -> GlueContext:
    """One interval with an oriented middle, self-glued into a circle."""
    comp = Component("line", (Arc(Frac(-1, 2), Frac(1, 2), 1),))
    curve = CurveModel(
        (comp,), tuple(f"m{i}" for i in range(len(marks))),
        tuple((0, Frac(x)) for x in marks), (),
        (XiEnd("xi1", 0, 1, Frac(0)), XiEnd("xi2", 0, -1, Frac(0))))
    M = tuple(sorted((curve.project(0, Frac(x)) for x in marks),
                     key=lambda z: z.key()))
    return GlueContext(XiContext(curve, M))
