"""Instance checks of the diagonal action on a two-component gluing.

Context: a two-sided component (outgoing ξ1+, incoming ξ1-) glued along ξ1+
to the incoming end ξ2- of a disjoint second component. The cone of
u: R_{ξ2-}⊗Id -> R_{ξ1-}⊗Id is identified with R_{ξ-} of the glued curve by
(f2, f1); the braiding σ has the displayed inverse; the gluing functor matches
the module structure through the w-blocks; and the block matrix τ (with σ^{-1}
in the middle) intertwines the glued crossing.
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
from ..gf2 import QuotientSpace
from ..strands import (Braid, chi, differential, hom_braids, identity_braid,
                       make_braid, mu, mu_path, strand_product)
from .actions import XiContext, boxtimes, braid_of_perm, kappa_strip
from .gluing import GlueContext, GluedData, glued_model


def diagonal_context(marks_a=(Frac(0),), marks_b=(Frac(0),)) -> GlueContext:
    """Two disjoint marked intervals; the first carries a two-sided end."""
    comp_a = Component("line", (Arc(Frac(-1, 2), Frac(1, 2), 1),))
    comp_b = Component("line", (Arc(Frac(-1, 2), Frac(1, 2), 1),))
    ids = tuple(f"a{i}" for i in range(len(marks_a))) + \
        tuple(f"b{i}" for i in range(len(marks_b)))
    pos = tuple((0, Frac(x)) for x in marks_a) + \
        tuple((1, Frac(x)) for x in marks_b)
    curve = CurveModel(
        (comp_a, comp_b), ids, pos, (),
        (XiEnd("xi1", 0, 1, Frac(0)), XiEnd("xi1m", 0, -1, Frac(0)),
         XiEnd("xi2", 1, -1, Frac(0))))
    M = tuple(sorted((curve.project(c, x) for c, x in pos),
                     key=lambda z: z.key()))
    return GlueContext(XiContext(curve, M))


@dataclass
class DiagonalData:
    glue: GlueContext
    gd: GluedData

    @property
    def curve(self) -> CurveModel:
        return self.glue.curve

    @property
    def zc(self) -> CurveModel:
        return self.gd.zcurve

    # -- slot points ---------------------------------------------------------

    def s_plus(self, k: int = 1) -> ZPoint:  # ξ1+(k) in Z
        return self.glue.ctx.slot("xi1", k)

    def s_one_minus(self, k: int = 1) -> ZPoint:  # ξ1-(-k) in Z
        return self.glue.ctx.slot("xi1m", k)

    def s_two_minus(self, k: int = 1) -> ZPoint:  # ξ2-(-k) in Z
        return self.glue.ctx.slot("xi2", k)

    def g_minus(self, k: int = 1) -> ZPoint:  # ξ-(-k) in the glued curve
        name = "xi1m"
        for x in self.zc.xi_ends:
            if x.name == name:
                return reg(x.comp, x.slot(k))
        raise KeyError(name)

    # -- hom bases -------------------------------------------------------------

    def R1(self, T, U, winding=0):
        return hom_braids(self.curve, tuple(U) + (self.s_one_minus(),), tuple(T), winding)

    def R2(self, T, U, winding=0):
        return hom_braids(self.curve, tuple(U) + (self.s_two_minus(),), tuple(T), winding)

    def L1(self, T, U, winding=0):
        return hom_braids(self.curve, tuple(U), tuple(T) + (self.s_plus(),), winding)

    def homZ(self, U, V, winding=0):
        return hom_braids(self.curve, tuple(V), tuple(U), winding)

    def Rg(self, T, S, winding=2):
        return hom_braids(self.zc, tuple(self.gd.psi_point(z) for z in S) +
                          (self.g_minus(),),
                          tuple(self.gd.psi_point(z) for z in T), winding)

    def homG(self, U, S, winding=2):
        return hom_braids(self.zc, tuple(self.gd.psi_point(z) for z in S),
                          tuple(self.gd.psi_point(z) for z in U), winding)

    # -- elementary paths ------------------------------------------------------

    def bridge_from_plus(self) -> PathClass:
        """[ξ1+(1) -> ξ2-(-1)] in the glued curve."""
        return cover_path(self.zc, 0, self.gd.plus_pos(1), self.gd.minus_pos(1))

    def glued_connector(self) -> PathClass:
        """[ξ1-(-1) -> ξ2-(-1)] in the glued curve."""
        start = self.g_minus().coord
        return cover_path(self.zc, 0, start, self.gd.minus_pos(1))

    # -- the maps f1, f2, u, Ξ on degree-one tensors ---------------------------

    def f1(self, alpha: Braid, beta: Braid) -> Optional[Braid]:
        """α·(β ⊠ id) for α in R1(T,U), β in Hom_glued(S,U)."""
        ga = self.gd.glued_braid(alpha)
        big = boxtimes(self.zc, beta, identity_braid(self.zc, [self.g_minus()]))
        return strand_product(self.zc, ga, big)

    def f2(self, alpha: Braid, beta: Braid) -> Optional[Braid]:
        """α·(β ⊠ [ξ1-(-1) -> ξ2-(-1)]) for α in R2(T,U)."""
        ga = self.gd.glued_braid(alpha)
        conn = self.glued_connector()
        big = boxtimes(self.zc, beta, make_braid(self.zc, {self.g_minus(): conn}))
        return strand_product(self.zc, ga, big)

    def xi_pair(self, beta2: Braid, alpha1: Braid) -> Optional[Braid]:
        """Ξ of a degree-one tensor: β·(id ⊠ [1 -> -1])·α (glued products)."""
        gb = self.gd.glued_braid(beta2)
        ga = self.gd.glued_braid(alpha1)
        mid_src = [dst(self.zc, p) for _, p in ga.strands
                   if dst(self.zc, p).key() != self.zc.project(
                       0, self.gd.plus_pos(1)).key()]
        bridge = make_braid(self.zc, {self.zc.project(0, self.gd.plus_pos(1)):
                                      self.bridge_from_plus()})
        big = boxtimes(self.zc, identity_braid(self.zc, mid_src), bridge)
        y = strand_product(self.zc, big, ga)
        if y is None:
            return None
        return strand_product(self.zc, gb, y)

    def u_map(self, alpha: Braid, beta: Braid) -> list:
        """u(α⊗β) for α in R2(T,U) normalized (α|U = id), β in Hom_glued(S,U).

        Returns pure tensors (r1 in R1(T, T∖{x}), hom in Hom_glued(S, T∖{x}))."""
        curve = self.curve
        ch = chi(curve, alpha)
        t2 = ch[self.s_two_minus()]
        U = [z for z, _ in alpha.strands if z != self.s_two_minus()]
        a_slot = alpha.strand(self.s_two_minus())
        out = []
        for x in U:
            if x.kind != "reg" or x.comp != 0:
                continue  # x runs over ξ̃1^{-1}(T): the two-sided component
            rest = [z for z in U if z != x] + [t2]
            r1 = boxtimes(curve, identity_braid(curve, [z for z in U if z != x] + [t2]),
                          make_braid(curve, {self.s_one_minus(): cover_path(
                              curve, 0, self.s_one_minus().coord, x.coord)}))
            # glued strand x -> t2 through the bridge
            up = cover_path(self.zc, 0, self.gd.psi(0, x.coord)[1],
                            self.gd.plus_pos(1))
            through = compose_paths(self.zc, self.gd.glued_path(a_slot),
                                    compose_paths(self.zc, self.bridge_from_plus(), up))
            assert through is not None
            big = boxtimes(self.zc,
                           identity_braid(self.zc, [self.gd.psi_point(z)
                                                    for z in U if z != x]),
                           make_braid(self.zc, {self.gd.psi_point(x): through}))
            hom = strand_product(self.zc, big, beta)
            if hom is not None:
                out.append((r1, hom))
        return out

    # -- normalization ----------------------------------------------------------

    def normalize_R(self, minus_slot: ZPoint, alpha: Braid) -> tuple:
        """α = (id ⊠ δ)·(h ⊠ id): returns (δ-braid, h); asserts the move."""
        curve = self.curve
        U = [z for z, _ in alpha.strands if z != minus_slot]
        delta = alpha.strand(minus_slot)
        ch = chi(curve, alpha)
        idpart = boxtimes(curve, identity_braid(
            curve, [ch[z] for z in U]), make_braid(curve, {minus_slot: delta}))
        h = make_braid(curve, {z: alpha.strand(z) for z in U})
        big = boxtimes(curve, h, identity_braid(curve, [minus_slot]))
        back = strand_product(curve, idpart, big)
        assert back is not None and back == alpha, "normalization move failed"
        return idpart, h

    # -- the braiding maps on pure tensors -------------------------------------

    def lambda_map(self, alpha: Braid, beta: Braid) -> Optional[tuple]:
        """λ(α⊗β) = ν^{-1}(α·β) for α in L1(T,U), β in R2(U,S)."""
        prod = strand_product(self.curve, alpha, beta)
        if prod is None:
            return None
        slot = self.s_two_minus()
        t = chi(self.curve, prod)[slot]
        rest_tgts = [dst(self.curve, p) for z, p in prod.strands if z != slot]
        first = boxtimes(self.curve, identity_braid(self.curve, rest_tgts),
                         make_braid(self.curve, {slot: prod.strand(slot)}))
        second = make_braid(self.curve, {z: p for z, p in prod.strands if z != slot})
        return first, second

    def sigma_map(self, alpha: Braid, beta: Braid) -> Optional[tuple]:
        """σ(α⊗β) for α in R2(T,U), β in R1(U,S) -> (R1, R2) pure tensor."""
        curve = self.curve
        s2, s1 = self.s_two_minus(), self.s_one_minus()
        ch_b = chi(curve, beta)
        u1 = ch_b[s1]
        composed = compose_paths(curve, alpha.strand(u1), beta.strand(s1))
        if composed is None:
            return None
        alpha_U = make_braid(curve, {z: p for z, p in alpha.strands if z != s2})
        if strand_product(curve, alpha_U, beta) is None:
            return None
        ch_a = chi(curve, alpha)
        first = boxtimes(
            curve,
            identity_braid(curve, [ch_a[z] for z, _ in alpha.strands
                                   if z not in (s2, u1)] + [ch_a[s2]]),
            make_braid(curve, {s1: composed}))
        alpha_rest = make_braid(curve, {z: p for z, p in alpha.strands
                                        if z not in (s2, u1)})
        beta_S = make_braid(curve, {z: p for z, p in beta.strands if z != s1})
        sp = strand_product(curve, alpha_rest, beta_S)
        if sp is None:
            return None
        second = boxtimes(curve, sp,
                          make_braid(curve, {s2: alpha.strand(s2)}))
        return first, second

    def sigma_inv(self, alpha: Braid, beta: Braid) -> Optional[tuple]:
        """σ^{-1}(α'⊗β') for α' in R1(T,U'), β' in R2(U',S) -> (R2, R1)."""
        curve = self.curve
        s2, s1 = self.s_two_minus(), self.s_one_minus()
        ch_b = chi(curve, beta)
        u1 = ch_b[s2]
        composed = compose_paths(curve, alpha.strand(u1), beta.strand(s2))
        if composed is None:
            return None
        alpha_U = make_braid(curve, {z: p for z, p in alpha.strands if z != s1})
        if strand_product(curve, alpha_U, beta) is None:
            return None
        ch_a = chi(curve, alpha)
        first = boxtimes(
            curve,
            identity_braid(curve, [ch_a[z] for z, _ in alpha.strands
                                   if z not in (s1, u1)] + [ch_a[s1]]),
            make_braid(curve, {s2: composed}))
        alpha_rest = make_braid(curve, {z: p for z, p in alpha.strands
                                        if z not in (s1, u1)})
        beta_S = make_braid(curve, {z: p for z, p in beta.strands if z != s2})
        sp = strand_product(curve, alpha_rest, beta_S)
        if sp is None:
            return None
        second = boxtimes(curve, sp,
                          make_braid(curve, {s1: alpha.strand(s1)}))
        return first, second

    def rho_map(self, alpha: Braid, beta: Braid) -> Optional[tuple]:
        """ρ(α⊗β) for α in L1(T,U), β in R1(U,S) -> (R1, L1) pure tensor."""
        curve = self.curve
        s1 = self.s_one_minus()
        plus = self.s_plus()
        ch_a = chi(curve, alpha)
        u2 = next(z for z, _ in alpha.strands if ch_a[z] == plus)
        ch_b = chi(curve, beta)
        u1 = ch_b[s1]
        if u1 == u2:
            return None
        two = strand_product(
            curve,
            boxtimes(curve, identity_braid(curve, [u1]),
                     make_braid(curve, {u2: alpha.strand(u2)})),
            boxtimes(curve, identity_braid(curve, [u2]),
                     make_braid(curve, {s1: beta.strand(s1)})))
        if two is None:
            return None
        alpha_rest = make_braid(curve, {z: p for z, p in alpha.strands if z != u2})
        mid = boxtimes(curve,
                       identity_braid(curve, [z for z, _ in alpha.strands
                                              if z not in (u1, u2)]),
                       make_braid(curve, {s1: beta.strand(s1)}))
        first = strand_product(curve, alpha_rest, mid)
        if first is None:
            return None
        beta_S = make_braid(curve, {z: p for z, p in beta.strands if z != s1})
        lift = boxtimes(curve,
                        identity_braid(curve, [z for z, _ in alpha.strands
                                               if z not in (u1, u2)]),
                        make_braid(curve, {u2: alpha.strand(u2)}))
        second = strand_product(curve, lift, beta_S)
        if second is None:
            return None
        return first, second

    # -- composites and the crossing -------------------------------------------

    def composite_g(self, g1: Braid, g2: Braid) -> Optional[Braid]:
        """R-composition iso: g1·(g2 ⊠ [-2 -> -1]) in the glued curve."""
        shift = make_braid(self.zc, {self.g_minus(2): cover_path(
            self.zc, self.g_minus(2).comp, self.g_minus(2).coord,
            self.g_minus(1).coord)})
        return strand_product(self.zc, g1, boxtimes(self.zc, g2, shift))

    def composite_Z(self, i: int, alpha: Braid, beta: Braid) -> Optional[Braid]:
        slot = self.s_one_minus if i == 1 else self.s_two_minus
        shift = make_braid(self.curve, {slot(2): cover_path(
            self.curve, slot(2).comp, slot(2).coord, slot(1).coord)})
        return strand_product(self.curve, alpha, boxtimes(self.curve, beta, shift))

    def glued_tau(self, x: Braid) -> Optional[Braid]:
        pair = (self.g_minus(1), self.g_minus(2))
        others = [z for z, _ in x.strands if z not in pair]
        cross = braid_of_perm(self.zc, pair, hecke.simple(2, 1))
        return strand_product(self.zc, x, boxtimes(
            self.zc, identity_braid(self.zc, others), cross))

    def tau_Z(self, i: int, alpha: Braid, beta: Braid) -> Optional[tuple]:
        """The ξi-rep τ on a pure tensor, via composite-cross-decompose."""
        slot = self.s_one_minus if i == 1 else self.s_two_minus
        x = self.composite_Z(i, alpha, beta)
        if x is None:
            return None
        pair = (slot(1), slot(2))
        others = [z for z, _ in x.strands if z not in pair]
        cross = braid_of_perm(self.curve, pair, hecke.simple(2, 1))
        xp = strand_product(self.curve, x, boxtimes(
            self.curve, identity_braid(self.curve, others), cross))
        if xp is None:
            return None
        return self.decompose_Z(i, xp)

    def decompose_Z(self, i: int, x: Braid) -> tuple:
        """Inverse of composite_Z: x -> (α, β) with β carrying the -1 slot."""
        curve = self.curve
        slot = self.s_one_minus if i == 1 else self.s_two_minus
        S = [z for z, _ in x.strands if z not in (slot(1), slot(2))]
        beta = boxtimes(curve,
                        make_braid(curve, {z: x.strand(z) for z in S}),
                        make_braid(curve, {slot(1): x.strand(slot(1))}))
        deep = compose_paths(curve, x.strand(slot(2)), cover_path(
            curve, slot(1).comp, slot(1).coord, slot(2).coord))
        assert deep is not None
        mids = [dst(curve, p) for z, p in beta.strands]
        alpha = boxtimes(curve, identity_braid(curve, mids),
                         make_braid(curve, {slot(1): deep}))
        back = self.composite_Z(i, alpha, beta)
        assert back is not None and back == x, "composite decomposition failed"
        return alpha, beta

    # -- the gluing functor on degree-one tensors -------------------------------

    def epsilon(self, beta: Braid, gamma: Braid) -> Optional[Braid]:
        """ε(β⊗γ) = κ_1(β·γ) for β in L1(V,U), γ in R1(U,S)."""
        prod = strand_product(self.curve, beta, gamma)
        if prod is None:
            return None
        return kappa_strip(self.glue.ctx, 1, prod, plus="xi1", minus="xi1m")


def _subsets(M):
    out = []
    for k in range(len(M) + 1):
        out += [tuple(c) for c in itertools.combinations(M, k)]
    return out


def _normalized_R(dd: DiagonalData, i: int, T, U):
    """Normalized basis tensors (id ⊠ δ) of R_i(T, U) with T = U ∪ {t}."""
    slot = dd.s_one_minus() if i == 1 else dd.s_two_minus()
    out = []
    tset = [t for t in T if t not in U]
    if len(tset) != 1 or any(u not in T for u in U):
        return out
    t = tset[0]
    from ..curve import admissible_classes
    for delta in admissible_classes(dd.curve, slot, t, 0):
        if delta.is_const:
            continue
        out.append(boxtimes(dd.curve, identity_braid(dd.curve, list(U)),
                            make_braid(dd.curve, {slot: delta})))
    return out


def diagonal_check(winding: int = 2, glue: GlueContext = None) -> dict:
    """All instance checks of the diagonal action on the standard context."""
    if glue is None:
        glue = diagonal_context()
    gd = glued_model(glue, 3)
    dd = DiagonalData(glue, gd)
    curve, zc = dd.curve, dd.zc
    M = glue.M
    failures = []
    subsets = _subsets(M)

    # --- σ and its displayed inverse, in the honest tensor quotients ---------
    for T in subsets:
        for S in subsets:
            pairs21 = []
            pairs12 = []
            for U in subsets:
                for x in dd.R2(T, U):
                    for y in dd.R1(U, S):
                        pairs21.append((U, x, y))
                for x in dd.R1(T, U):
                    for y in dd.R2(U, S):
                        pairs12.append((U, x, y))
            if not pairs21 and not pairs12:
                continue

            def build_space(pairs, left_kind):
                space = QuotientSpace([(x.key(), y.key()) for _, x, y in pairs])
                slot_l = dd.s_two_minus() if left_kind == 2 else dd.s_one_minus()
                by_right = {}
                by_left = {}
                for U, x, y in pairs:
                    by_left.setdefault(U, set()).add(x)
                    by_right.setdefault(U, set()).add(y)
                for U in by_left:
                    for Up in by_right:
                        for h in dd.homZ(U, Up):
                            for x in by_left[U]:
                                xh = strand_product(curve, x, boxtimes(
                                    curve, h, identity_braid(curve, [slot_l])))
                                for y in by_right[Up]:
                                    hy = strand_product(curve, h, y)
                                    keys = []
                                    if xh is not None:
                                        keys.append((xh.key(), y.key()))
                                    if hy is not None:
                                        keys.append((x.key(), hy.key()))
                                    if keys:
                                        space.add_relation(keys)
                return space

            sp21 = build_space(pairs21, 2)
            sp12 = build_space(pairs12, 1)

            def sigma_vec(x, y):
                out = dd.sigma_map(x, y)
                return [] if out is None else [(out[0].key(), out[1].key())]

            def sigma_inv_vec(x, y):
                out = dd.sigma_inv(x, y)
                return [] if out is None else [(out[0].key(), out[1].key())]

            for U, x, y in pairs21:
                out = dd.sigma_map(x, y)
                round2 = [] if out is None else (
                    [] if dd.sigma_inv(*out) is None
                    else [(dd.sigma_inv(*out)[0].key(), dd.sigma_inv(*out)[1].key())])
                if sp21.canon(round2) != sp21.canon([(x.key(), y.key())]):
                    failures.append(f"sigma_inv∘sigma != id at T={T} S={S}")
            for U, x, y in pairs12:
                out = dd.sigma_inv(x, y)
                round2 = [] if out is None else (
                    [] if dd.sigma_map(*out) is None
                    else [(dd.sigma_map(*out)[0].key(), dd.sigma_map(*out)[1].key())])
                if sp12.canon(round2) != sp12.canon([(x.key(), y.key())]):
                    failures.append(f"sigma∘sigma_inv != id at T={T} S={S}")

    # --- (f2, f1): bijection of pointed sets and d-isomorphism ---------------
    for T in subsets:
        for S in subsets:
            if len(T) != len(S) + 1:
                continue
            target = {b.key() for b in dd.Rg(T, S, winding)}
            images = {}
            for i in (1, 2):
                for U in subsets:
                    for alpha in _normalized_R(dd, i, T, U):
                        for beta in dd.homG(U, S, winding):
                            f = dd.f1 if i == 1 else dd.f2
                            img = f(alpha, beta)
                            if img is None:
                                failures.append(f"f{i} vanished on a normalized tensor")
                                continue
                            if img.key() in images:
                                failures.append(f"(f2,f1) not injective at T={T} S={S}")
                            images[img.key()] = (i, alpha, beta)
            if set(images) != target:
                failures.append(f"(f2,f1) not onto R_xi- at T={T} S={S}: "
                                f"{len(images)} vs {len(target)}")
            # cone differential matches the glued differential
            for key, (i, alpha, beta) in images.items():
                f = dd.f1 if i == 1 else dd.f2
                lhs = differential(zc, f(alpha, beta))
                rhs = F2Sum()
                for da in differential(curve, alpha):
                    v = f(da, beta)
                    if v is not None:
                        rhs = rhs + F2Sum.of(v)
                for db in differential(zc, beta):
                    v = f(alpha, db)
                    if v is not None:
                        rhs = rhs + F2Sum.of(v)
                if i == 2:
                    for (r1, hom) in dd.u_map(alpha, beta):
                        v = dd.f1(r1, hom)
                        if v is not None:
                            rhs = rhs + F2Sum.of(v)
                if lhs != rhs:
                    failures.append(f"cone d mismatch (f{i}) at T={T} S={S}")

    # --- the w-blocks against the glued action (eq:commdiag) -----------------
    comm_checked = 0
    for T in subsets:
        for V in subsets:
            if len(T) != len(V) + 1:
                continue
            for U in subsets:
                if len(U) != len(V) + 1:
                    continue
                for S in subsets:
                    if len(S) != len(U) - 1:
                        continue
                    for alpha in dd.R2(T, V):
                        for beta in dd.L1(V, U):
                            xi_left = dd.xi_pair(alpha, beta)
                            for gamma in dd.R2(U, S):
                                lhs = None
                                img = dd.f2(gamma, identity_braid(
                                    zc, [gd.psi_point(z) for z in S]))
                                if xi_left is not None and img is not None:
                                    lhs = strand_product(zc, xi_left, img)
                                out = dd.lambda_map(beta, gamma)
                                rhs = None
                                if out is not None:
                                    g2, l1 = out
                                    tau_out = dd.tau_Z(2, alpha, g2)
                                    if tau_out is not None:
                                        a2, g2b = tau_out
                                        hom = dd.xi_pair(g2b, l1)
                                        if hom is not None:
                                            rhs = dd.f2(a2, hom)
                                lk = lhs.key() if lhs is not None else None
                                rk = rhs.key() if rhs is not None else None
                                if lk != rk:
                                    failures.append(f"w11 diagram fails at T={T} S={S}")
                                comm_checked += 1
                            for gamma in dd.R1(U, S):
                                lhs = None
                                img = dd.f1(gamma, identity_braid(
                                    zc, [gd.psi_point(z) for z in S]))
                                if xi_left is not None and img is not None:
                                    lhs = strand_product(zc, xi_left, img)
                                acc = F2Sum()
                                eps = dd.epsilon(beta, gamma)
                                if eps is not None:
                                    v = dd.f2(alpha, dd.gd.glued_braid(eps))
                                    if v is not None:
                                        acc = acc + F2Sum.of(v)
                                out = dd.rho_map(beta, gamma)
                                if out is not None:
                                    r1, l1 = out
                                    sig = dd.sigma_map(alpha, r1)
                                    if sig is not None:
                                        r1p, r2p = sig
                                        hom = dd.xi_pair(r2p, l1)
                                        if hom is not None:
                                            v = dd.f1(r1p, hom)
                                            if v is not None:
                                                acc = acc + F2Sum.of(v)
                                lhs_sum = F2Sum.of(lhs) if lhs is not None else F2Sum()
                                if lhs_sum != acc:
                                    failures.append(f"w12+w22 diagram fails at T={T} S={S}")
                                comm_checked += 1

    # --- τ: block matrix vs the glued crossing --------------------------------
    tau_checked = 0
    for T in subsets:
        for U in subsets:
            if len(T) != len(U) + 1:
                continue
            for S in subsets:
                if len(U) != len(S) + 1:
                    continue
                for i in (1, 2):
                    for j in (1, 2):
                        for alpha in _normalized_R(dd, i, T, U):
                            for beta in _normalized_R(dd, j, U, S):
                                fi = dd.f1 if i == 1 else dd.f2
                                fj = dd.f1 if j == 1 else dd.f2
                                gi = fi(alpha, identity_braid(
                                    zc, [gd.psi_point(z) for z in U]))
                                gj = fj(beta, identity_braid(
                                    zc, [gd.psi_point(z) for z in S]))
                                comp = dd.composite_g(gi, gj)
                                if comp is None:
                                    continue
                                lhs = dd.glued_tau(comp)
                                rhs = None
                                if (i, j) == (2, 1):
                                    rhs = None  # zero block
                                elif (i, j) == (1, 2):
                                    out = dd.sigma_inv(alpha, beta)
                                    if out is not None:
                                        a2, b1 = out
                                        W = [w for w, _ in a2.strands
                                             if w != dd.s_two_minus()]
                                        g2 = dd.f2(a2, identity_braid(
                                            zc, [gd.psi_point(z) for z in W]))
                                        g1 = dd.f1(b1, identity_braid(
                                            zc, [gd.psi_point(z) for z in S]))
                                        if g2 is not None and g1 is not None:
                                            rhs = dd.composite_g(g2, g1)
                                else:
                                    out = dd.tau_Z(i, alpha, beta)
                                    if out is not None:
                                        a2, b2 = out
                                        slot_i = (dd.s_one_minus() if i == 1
                                                  else dd.s_two_minus())
                                        W = [w for w, _ in a2.strands
                                             if w != slot_i]
                                        g2 = fi(a2, identity_braid(
                                            zc, [gd.psi_point(z) for z in W]))
                                        g1 = fi(b2, identity_braid(
                                            zc, [gd.psi_point(z) for z in S]))
                                        if g2 is not None and g1 is not None:
                                            rhs = dd.composite_g(g2, g1)
                                lk = lhs.key() if lhs is not None else None
                                rk = rhs.key() if rhs is not None else None
                                if lk != rk:
                                    failures.append(f"tau block mismatch at ({i},{j})")
                                tau_checked += 1

    # --- τ² = 0, d(τ) = id and the braid relation on the glued side ----------
    for T in subsets:
        for S in subsets:
            if len(T) != len(S) + 2:
                continue
            comps = []
            for U in subsets:
                if len(U) != len(S) + 1:
                    continue
                for g1 in dd.Rg(T, U, winding):
                    for g2 in dd.Rg(U, S, winding):
                        c = dd.composite_g(g1, g2)
                        if c is not None:
                            comps.append(c)
            for x in set(comps):
                t1 = dd.glued_tau(x)
                if t1 is not None and dd.glued_tau(t1) is not None:
                    failures.append("tau^2 != 0 on the glued side")
                lhs = F2Sum()
                if t1 is not None:
                    lhs = differential(zc, t1)
                for dx in differential(zc, x):
                    t2 = dd.glued_tau(dx)
                    if t2 is not None:
                        lhs = lhs + F2Sum.of(t2)
                if lhs != F2Sum.of(x):
                    failures.append("d(tau) != id on the glued side")
    # braid relation on three appended strands
    pts = [dd.g_minus(k) for k in (1, 2, 3)]
    t12 = braid_of_perm(zc, (pts[0], pts[1]), hecke.simple(2, 1))
    t23 = braid_of_perm(zc, (pts[1], pts[2]), hecke.simple(2, 1))
    b12 = boxtimes(zc, t12, identity_braid(zc, [pts[2]]))
    b23 = boxtimes(zc, t23, identity_braid(zc, [pts[0]]))

    def triple(a, b, c):
        x = strand_product(zc, a, b)
        return strand_product(zc, x, c) if x is not None else None

    if triple(b12, b23, b12) != triple(b23, b12, b23) or triple(b12, b23, b12) is None:
        failures.append("braid relation fails on glued slots")

    return {
        "check": "diagonal",
        "parameters": {"winding": winding},
        "status": "pass" if not failures else "fail",
        "counterexample": sorted(set(failures))[:6] or None,
        "w_diagram_checked": comm_checked,
        "tau_checked": tau_checked,
    }
