"""Braids and the strand category of a curve.

A braid is a finite family of admissible path classes inducing a bijection of
endpoint sets. The strand product keeps a composite exactly when the
Γ_{Z_exc^+}(Z)-degree is additive; the differential resolves the crossings in
D(θ). Products are decided by direct degree arithmetic; the explicit defect
formula is implemented separately and cross-checked in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Frac
from typing import Optional

from .f2core import DegreeData, F2Sum
from .curve import (Connector, CurveModel, GammaZ, PathClass, ZPoint, compose_paths,
                    connectors, const_path, cover_path, dst, intersection_count,
                    is_admissible, m_minus_at, m_plus_at, path, src, start_lifts,
                    admissible_classes)


@dataclass(frozen=True, eq=False)
class Braid:
    """Strands indexed by their sources; targets are derived."""

    strands: tuple  # ((ZPoint, PathClass), ...) sorted by source key

    def key(self):
        k = self.__dict__.get("_key")
        if k is None:
            k = tuple((z.key(), p.key()) for z, p in self.strands)
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        return isinstance(other, Braid) and self.key() == other.key()

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.key())
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        return self.key() < other.key()

    def sources(self) -> tuple:
        return tuple(z for z, _ in self.strands)

    def strand(self, z: ZPoint) -> PathClass:
        for zz, p in self.strands:
            if zz == z:
                return p
        raise KeyError(z)

    def restrict(self, keep) -> "Braid":
        keep = set(k.key() for k in keep)
        return Braid(tuple((z, p) for z, p in self.strands if z.key() in keep))


def make_braid(curve: CurveModel, assignment: dict) -> Braid:
    """Build and validate a braid from a source -> class mapping."""
    strands = tuple(sorted(assignment.items(), key=lambda zp: zp[0].key()))
    targets = []
    for z, p in strands:
        if src(curve, p) != z:
            raise ValueError(f"strand at {z} does not start there")
        if not is_admissible(curve, p):
            raise ValueError("strand not admissible")
        targets.append(dst(curve, p))
    if len({t.key() for t in targets}) != len(targets):
        raise ValueError("strand endpoints do not form a bijection")
    return Braid(strands)


def identity_braid(curve: CurveModel, points) -> Braid:
    return make_braid(curve, {z: const_path(curve, z) for z in points})


def targets(curve: CurveModel, b: Braid) -> tuple:
    return tuple(sorted((dst(curve, p) for _, p in b.strands), key=lambda z: z.key()))


def chi(curve: CurveModel, b: Braid) -> dict:
    return {z: dst(curve, p) for z, p in b.strands}


def precompose(curve: CurveModel, g: Braid, f: Braid) -> Optional[Braid]:
    """g∘f in the pre-strand category (f applied first)."""
    if targets(curve, f) != tuple(sorted(g.sources(), key=lambda z: z.key())):
        raise ValueError("object mismatch")
    out = []
    for z, p in f.strands:
        q = g.strand(dst(curve, p))
        comp = compose_paths(curve, q, p)
        if comp is None:
            return None
        out.append((z, comp))
    # strandwise composites of two braids are admissible with bijective ends
    return Braid(tuple(out))


# ---------------------------------------------------------------------------
# degree


def braid_points(curve: CurveModel, *braids) -> set:
    pts = set()
    for b in braids:
        for _, p in b.strands:
            for (c, x, d) in start_lifts(curve, p):
                circle = curve.components[c].kind == "circle"
                pts.add((c, x % 1 if circle else x))
                e = x + d
                pts.add((c, e % 1 if circle else e))
    return pts


def gamma_ctx(curve: CurveModel, *braids) -> GammaZ:
    return GammaZ.for_points(curve, braid_points(curve, *braids))


def pair_i(curve: CurveModel, b: Braid) -> dict:
    """2·i(θ) per topological component (ordered source pairs)."""
    zc = curve.z_components()
    out: dict = {}
    sts = b.strands
    for (z1, p1), (z2, p2) in itertools.permutations(sts, 2):
        v = intersection_count(curve, p1, p2)
        if v:
            comp = p1.comp if not p1.is_const else p2.comp
            if comp < 0:  # both constant at singular points: v would be 0
                continue
            om = zc[comp]
            out[om] = out.get(om, 0) + v
    return out


def departure(curve: CurveModel, p: PathClass):
    """The cover direction θ(0+) of a non-constant class."""
    assert not p.is_const
    return (p.comp, p.start % 1 if curve.components[p.comp].kind == "circle" else p.start,
            1 if p.disp > 0 else -1)


def arrival(curve: CurveModel, p: PathClass):
    """The cover direction θ(1-) of a non-constant class."""
    assert not p.is_const
    e = p.end
    return (p.comp, e % 1 if curve.components[p.comp].kind == "circle" else e,
            -1 if p.disp > 0 else 1)


def m_of_braid(ctx: GammaZ, curve: CurveModel, b: Braid) -> dict:
    """m(θ) = Σ_s Σ_{c in θ_s(0+) ∪ ιθ_s(0+)} m_c([θ]) e_c, in L(Z)."""
    rchain: dict = {}
    for _, p in b.strands:
        for k, v in ctx.rpart_of_path(p).items():
            rchain[k] = rchain.get(k, 0) + v
    out: dict = {}
    for z, p in b.strands:
        if p.is_const:
            dirs = [(c, x, s) for (c, x) in curve.lifts(z) for s in (+1, -1)]
        else:
            c, x, s = departure(curve, p)
            dirs = [(c, x, s), (c, x, -s)]
        for (c, x, s) in dirs:
            v = ctx.m_dir(rchain, c, x, s)
            if v:
                key = ("e", c, x)
                out[key] = out.get(key, 0) + (v if s > 0 else -v)
    return {k: v for k, v in out.items() if v}, rchain


def deg(curve: CurveModel, b: Braid, ctx: GammaZ = None) -> DegreeData:
    """deg'(θ) = (i(θ), -m(θ), [θ]) folded into Γ_{Z_exc^+}(Z)."""
    if ctx is None:
        ctx = gamma_ctx(curve, b)
    mpart, rchain = m_of_braid(ctx, curve, b)
    return ctx.degree(pair_i(curve, b), {k: -v for k, v in mpart.items()}, rchain)


def strand_product(curve: CurveModel, g: Braid, f: Braid,
                   ctx: GammaZ = None, deg_cache: dict = None) -> Optional[Braid]:
    """g·f: the composite when its degree is the product of the degrees."""
    gf = precompose(curve, g, f)
    if gf is None:
        return None
    if ctx is None:
        if deg_cache is not None:
            raise ValueError("deg_cache needs an explicit shared ctx")
        ctx = gamma_ctx(curve, g, f)

    def d_of(b):
        if deg_cache is None:
            return deg(curve, b, ctx)
        key = b.key()
        if key not in deg_cache:
            deg_cache[key] = deg(curve, b, ctx)
        return deg_cache[key]

    if ctx.mul(d_of(g), d_of(f)) == d_of(gf):
        return gf
    return None


def strand_product_nonsingular(curve: CurveModel, g: Braid, f: Braid,
                               i_cache: dict = None) -> Optional[Braid]:
    """Fast product for curves without matched points.

    With no exceptional points the degree-product defect is exactly the sum
    of pairwise intersection-additivity defects, so the composite survives
    iff i(g_a, g_b) + i(f_a, f_b) = i((gf)_a, (gf)_b) for all source pairs.
    """
    if curve.matching:
        raise ValueError("fast path requires a matching-free curve")
    gf = precompose(curve, g, f)
    if gf is None:
        return None
    chif = chi(curve, f)

    def icount(p1, p2):
        if i_cache is None:
            return intersection_count(curve, p1, p2)
        key = (p1.key(), p2.key())
        v = i_cache.get(key)
        if v is None:
            v = intersection_count(curve, p1, p2)
            i_cache[key] = v
        return v

    for (a, fa), (b, fb) in itertools.combinations(f.strands, 2):
        ga, gb = g.strand(chif[a]), g.strand(chif[b])
        if icount(ga, gb) + icount(fa, fb) !=                 icount(gf.strand(a), gf.strand(b)):
            return None
    return gf


def degree_defect(curve: CurveModel, g: Braid, f: Braid) -> dict:
    """The explicit non-negative defect (per component, in half-integers).

    Per unordered source pair {a, b} the contribution is
    T1 + T2 - i((g∘f)_a, (g∘f)_b), where T1 = i(g_a, g_b) and T2 = i(f_a, f_b)
    except that an identity strand at a singular point is replaced by the
    tangential count of the other strand through the surviving direction
    (the correction sets E and E' of the degree-product lemma; when both
    orders of a pair carry corrections, both replacements apply). Vanishes
    iff the strand product survives.
    """
    gf = precompose(curve, g, f)
    if gf is None:
        raise ValueError("braids do not compose")
    zc = curve.z_components()
    srcs = f.sources()
    chif = chi(curve, f)

    def is_exc(z: ZPoint) -> bool:
        return z.kind == "sing"

    def in_E(a, b):
        fa, fb = f.strand(a), f.strand(b)
        ga = g.strand(chif[a])
        return is_exc(a) and fa.is_const and not ga.is_const and not fb.is_const

    def in_Ep(a, b):
        fa = f.strand(a)
        ga, gb = g.strand(chif[a]), g.strand(chif[b])
        return is_exc(chif[a]) and not fa.is_const and ga.is_const and not gb.is_const

    out: dict = {}
    for a, b in itertools.combinations(srcs, 2):
        fa, fb = f.strand(a), f.strand(b)
        ga, gb = g.strand(chif[a]), g.strand(chif[b])
        # top factor: identity-at-singular g-strands get replaced
        if in_Ep(a, b):
            c, x, sd = arrival(curve, fa)
            t1 = m_minus_at(curve, start_lifts(curve, gb)[0], c, x, sd)
        elif in_Ep(b, a):
            c, x, sd = arrival(curve, fb)
            t1 = m_minus_at(curve, start_lifts(curve, ga)[0], c, x, sd)
        else:
            t1 = intersection_count(curve, ga, gb)
        # bottom factor: identity-at-singular f-strands get replaced
        if in_E(a, b):
            c, x, sd = departure(curve, ga)
            t2 = m_plus_at(curve, start_lifts(curve, fb)[0], c, x, sd)
        elif in_E(b, a):
            c, x, sd = departure(curve, gb)
            t2 = m_plus_at(curve, start_lifts(curve, fa)[0], c, x, sd)
        else:
            t2 = intersection_count(curve, fa, fb)
        t3 = intersection_count(curve, gf.strand(a), gf.strand(b))
        term = Frac(t1 + t2 - t3)
        if term:
            p = f.strand(a)
            comp = p.comp if not p.is_const else curve.lifts(a)[0][0]
            om = zc[comp]
            out[om] = out.get(om, 0) + term
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# crossings and the differential


@dataclass(frozen=True)
class Crossing:
    """A connecting class between two strands, with its D(θ)-flag."""

    s1: ZPoint
    s2: ZPoint
    conn: Connector
    in_d: bool

    def key(self):
        return (self.s1.key(), self.s2.key(), self.conn.key())

    def __lt__(self, other):
        return self.key() < other.key()


def crossing_set(curve: CurveModel, b: Braid) -> list:
    """L(θ) over ordered source pairs, with D(θ) flags."""
    raw = []
    for (z1, p1), (z2, p2) in itertools.permutations(b.strands, 2):
        for conn in connectors(curve, p1, p2):
            raw.append((z1, z2, conn))
    out = []
    for (z1, z2, conn) in raw:
        e, ebar = conn.zeta.disp, conn.zbar_disp
        ok = True
        if curve.components[conn.zeta.comp].kind == "circle":
            if abs(e) > 1 and abs(ebar) > 1:
                ok = False  # condition (a): both sides reducible by a turn
        if ok:
            # condition (b): no same-orientation splitting inside L(θ)
            for (w1, wm, c2) in raw:
                if w1 != z1 or wm in (z1, z2):
                    continue
                if c2.zeta.comp != conn.zeta.comp or c2.zeta.start != conn.zeta.start:
                    continue
                if (c2.zeta.disp > 0) != (e > 0):
                    continue
                rest = e - c2.zeta.disp
                if rest == 0 or (rest > 0) != (e > 0):
                    continue
                mid_end = c2.zeta.end
                for (wm2, w2, c1) in raw:
                    if wm2 != wm or w2 != z2:
                        continue
                    if c1.zeta.comp != conn.zeta.comp or c1.zeta.disp != rest:
                        continue
                    circle = curve.components[conn.zeta.comp].kind == "circle"
                    startc = c1.zeta.start
                    if circle:
                        if (mid_end - startc).denominator != 1:
                            continue
                    elif mid_end != startc:
                        continue
                    ok = False
                    break
                if not ok:
                    break
        out.append(Crossing(z1, z2, conn, ok))
    return sorted(out)


def resolve(curve: CurveModel, b: Braid, cr: Crossing) -> Braid:
    """θ^ζ: swap the two strands through the connecting class."""
    z1, z2, zeta = cr.s1, cr.s2, cr.conn.zeta
    p1, p2 = b.strand(z1), b.strand(z2)
    l2 = None
    for (c, x, d) in start_lifts(curve, p2):
        circle = curve.components[c].kind == "circle"
        ze = zeta.end
        if c == zeta.comp and ((ze - x).denominator == 1 if circle else ze == x):
            l2 = (c, x, d)
    l1 = None
    for (c, x, d) in start_lifts(curve, p1):
        if c == zeta.comp and x == zeta.start:
            l1 = (c, x, d)
    assert l1 is not None and l2 is not None
    new1 = cover_path(curve, zeta.comp, zeta.start, zeta.end + l2[2])
    new2 = cover_path(curve, zeta.comp, zeta.end, zeta.start + l1[2])
    out = {z: p for z, p in b.strands}
    out[z1], out[z2] = new1, new2
    return make_braid(curve, out)


def differential(curve: CurveModel, b: Braid) -> F2Sum:
    """d(θ) = Σ_{ζ in D(θ)/inv} θ^ζ as a GF(2) sum of braids."""
    acc = F2Sum()
    for cr in crossing_set(curve, b):
        if not cr.in_d or cr.s1.key() > cr.s2.key():
            continue  # one representative per inv-orbit
        acc = acc + F2Sum.of(resolve(curve, b, cr))
    return acc


def differential_sum(curve: CurveModel, x: F2Sum) -> F2Sum:
    return x.map(lambda b: differential(curve, b))


def product_sum(curve: CurveModel, gs: F2Sum, fs: F2Sum) -> F2Sum:
    """Bilinear product of braid sums in the additive envelope.

    Terms whose objects do not match compose to zero (the sums may mix
    objects, e.g. images of the cover pullback)."""
    acc = F2Sum()
    for g in gs:
        for f in fs:
            try:
                gf = strand_product(curve, g, f)
            except ValueError:
                continue
            if gf is not None:
                acc = acc + F2Sum.of(gf)
    return acc


# ---------------------------------------------------------------------------
# μ, generation and factorization


def mu_path(curve: CurveModel, z0: ZPoint, p: PathClass) -> int:
    if p.is_const:
        return 0
    return intersection_count(curve, p, const_path(curve, z0))


def mu(curve: CurveModel, z0: ZPoint, b: Braid) -> int:
    return sum(mu_path(curve, z0, p) for _, p in b.strands)


def path_length(p: PathClass) -> Frac:
    return abs(p.disp) if not p.is_const else Frac(0)


def braid_length(b: Braid) -> Frac:
    return sum((path_length(p) for _, p in b.strands), Frac(0))


def cut_at_first(curve: CurveModel, p: PathClass, stops) -> Optional[tuple]:
    """Split p = tail∘head at the first strictly-positive hit of ``stops``
    (a set of Z-points); returns (head, tail) or None if no hit."""
    if p.is_const:
        return None
    stop_lifts = set()
    for z in stops:
        for (c, x) in curve.lifts(z):
            if c == p.comp:
                stop_lifts.add(x)
    if not stop_lifts:
        return None
    circle = curve.components[p.comp].kind == "circle"
    best = None
    for x in stop_lifts:
        if circle:
            if p.disp > 0:
                k = (p.start - x).__floor__() + 1
                cand = x + k
                if cand > p.end:
                    continue
            else:
                k = (p.start - x).__ceil__() - 1
                cand = x + k
                if cand < p.end:
                    continue
        else:
            cand = x
            if p.disp > 0 and not (p.start < cand <= p.end):
                continue
            if p.disp < 0 and not (p.end <= cand < p.start):
                continue
        if best is None or abs(cand - p.start) < abs(best - p.start):
            best = cand
    if best is None:
        return None
    head = cover_path(curve, p.comp, p.start, best)
    tail = cover_path(curve, p.comp, best, p.end) if best != p.end else None
    return head, tail


def first_return_decomposition(curve: CurveModel, M: tuple, I0, p: PathClass):
    """θ_i = β∘α with α ending at the first M∖I0 point met."""
    stops = [z for z in M if z.key() not in {w.key() for w in I0}]
    cut = cut_at_first(curve, p, stops)
    assert cut is not None, "strand never returns to M"
    head, tail = cut
    beta = tail if tail is not None else const_path(curve, dst(curve, head))
    return head, beta


def _search_divisor(curve: CurveModel, z0: ZPoint, b: Braid) -> tuple:
    """Bounded search for θ = r'·r with μ(r) = 1 (nonzero strand product).

    Candidate right-divisor strands run from each source to a braid-target
    point, allowing a one-turn overshoot; the left divisor is then forced."""
    tgt_points = sorted({dst(curve, p) for _, p in b.strands}, key=lambda z: z.key())
    per_strand = []
    for z, p in b.strands:
        opts = [(const_path(curve, z), p)]
        for (c, x, d) in start_lifts(curve, p):
            bound = abs(d) + 1
            for t in tgt_points:
                for (ct, xt) in curve.lifts(t):
                    if ct != c:
                        continue
                    circle = curve.components[c].kind == "circle"
                    if circle:
                        base = (xt - x) - (xt - x).__floor__()
                        disps = [base + k for k in range(-int(bound) - 1, int(bound) + 2)
                                 if base + k != 0 and abs(base + k) <= bound]
                    else:
                        disps = [xt - x] if xt != x else []
                    for e in disps:
                        head = cover_path(curve, c, x, x + e)
                        tail = cover_path(curve, c, x + e, x + d)
                        if is_admissible(curve, head) and \
                                (tail.is_const or is_admissible(curve, tail)):
                            opts.append((head, tail))
        per_strand.append((z, sorted(set(opts), key=lambda hq: (hq[0].key(), hq[1].key()))))
    for combo in itertools.product(*[opts for _, opts in per_strand]):
        try:
            r = make_braid(curve, {z: head for (z, _), (head, _) in zip(per_strand, combo)})
        except ValueError:
            continue
        if mu(curve, z0, r) != 1:
            continue
        try:
            rp = make_braid(curve, {dst(curve, head): tail
                                    for (head, tail) in combo})
        except ValueError:
            continue
        prod = strand_product(curve, rp, r)
        if prod is not None and prod == b:
            return r, rp
    raise AssertionError("no μ=1 right divisor found")


def factorize(curve: CurveModel, M: tuple, z0: ZPoint, b: Braid) -> tuple:
    """θ = r'(θ)·r(θ) with μ(r(θ)) = 1 and minimal-support first pass.

    Follows the divisor lemmas: strip length-additive divisors u with
    μ(u) = 0, until the first strand through z0 can be split off.
    """
    if mu(curve, z0, b) < 2:
        raise ValueError("factorize needs μ(θ) >= 2")
    u_stack = []
    cur = b
    while True:
        I0 = [z for z, p in cur.strands if p.is_const]
        active = [z for z, p in cur.strands if not p.is_const]
        alphas = {}
        betas = {}
        for z in active:
            a, be = first_return_decomposition(curve, tuple(cur.sources()), I0, cur.strand(z))
            alphas[z], betas[z] = a, be
        arrows = {z: dst(curve, alphas[z]) for z in active}

        def orbit(z):
            seen = []
            w = z
            while w is not None and w.key() not in [s.key() for s in seen]:
                seen.append(w)
                nxt = arrows.get(w)
                w = nxt if nxt is not None and any(nxt == a for a in active) else None
            return seen

        def valid(I_set):
            ends = [arrows[z].key() for z in I_set]
            if len(set(ends)) != len(ends):
                return False
            for z in I_set:
                nxt = arrows[z]
                if any(nxt == a for a in active) and nxt.key() not in {w.key() for w in I_set}:
                    return False
            return True

        def u_of(I_set):
            out = {}
            for z, p in cur.strands:
                out[z] = alphas[z] if any(z == w for w in I_set) else const_path(curve, z)
            return make_braid(curve, out)

        def remainder(I_set):
            out = {}
            for z, p in cur.strands:
                if any(z == w for w in I_set):
                    out[arrows[z]] = betas[z]
                else:
                    out[z] = p
            return make_braid(curve, out)

        found = None
        for z in active:
            if mu_path(curve, z0, alphas[z]) != 0:
                continue
            orb = orbit(z)
            for k in range(len(orb)):
                cand = orb[k:]
                if valid(cand) and all(mu_path(curve, z0, alphas[w]) == 0 for w in cand):
                    found = cand
                    break
            if found:
                break
        if found:
            u = u_of(found)
            u_stack.append(u)
            cur = remainder(found)
            continue

        # second branch: split at a strand of minimal first-pass support
        through = [z for z in active if mu_path(curve, z0, cur.strand(z)) >= 1]
        assert through, "no strand passes through z0"

        def first_pass_interval(z):
            head = cut_at_first(curve, cur.strand(z), [z0])[0]
            return (min(head.start, head.end), max(head.start, head.end))

        def contains(a, bnd):
            return a[0] <= bnd[0] and bnd[1] <= a[1]

        def is_minimal(z):
            me = first_pass_interval(z)
            return not any(w != z and contains(me, first_pass_interval(w))
                           and first_pass_interval(w) != me for w in through)

        candidates = sorted(through, key=lambda z: (not is_minimal(z), z.key()))
        chosen = None
        for s_min in candidates:
            orb = orbit(s_min)
            if valid(orb) and mu(curve, z0, u_of(orb)) == 1:
                chosen = orb
                break
        if chosen is not None:
            r = u_of(chosen)
            rprime = remainder(chosen)
        else:
            # crossing strands with incomparable first passes: search directly
            r, rprime = _search_divisor(curve, z0, cur)
        break

    # fold the stripped μ=0 divisors back into r
    for u in reversed(u_stack):
        prod = strand_product(curve, r, u)
        assert prod is not None, "divisor product vanished"
        r = prod
    check = strand_product(curve, rprime, r)
    assert check is not None and check == b, "factorization does not multiply back"
    return rprime, r


# ---------------------------------------------------------------------------
# pullback along the non-singular cover


def pullback_braids(curve: CurveModel, b: Braid) -> list:
    """All braid lifts of b to the cover (matching erased)."""
    cover = curve.without_matching()
    choices = []
    for z, p in b.strands:
        lifts = []
        for (c, x, d) in start_lifts(curve, p):
            q = cover_path(cover, c, x, x + d)
            lifts.append((cover.project(c, x), q))
        choices.append(lifts)
    out = []
    for combo in itertools.product(*choices):
        out.append(make_braid(cover, dict(combo)))
    return out


def pullback(curve: CurveModel, xs: F2Sum) -> F2Sum:
    """f^#: sum over all lifts along the non-singular cover quotient."""
    acc = F2Sum()
    for b in xs:
        acc = acc + F2Sum(pullback_braids(curve, b))
    return acc


# ---------------------------------------------------------------------------
# Hom-set enumeration


def hom_braids(curve: CurveModel, I: tuple, J: tuple, winding: int,
               mu_bound: Optional[int] = None, z0: Optional[ZPoint] = None) -> list:
    """All braids I -> J within the winding bound (and optional μ bound)."""
    I = tuple(sorted(I, key=lambda z: z.key()))
    J = tuple(sorted(J, key=lambda z: z.key()))
    if len(I) != len(J):
        return []
    table = {(zi, zj): admissible_classes(curve, zi, zj, winding)
             for zi in I for zj in J}
    out = []
    for perm in itertools.permutations(range(len(J))):
        for combo in itertools.product(*[table[(zi, J[perm[k]])]
                                         for k, zi in enumerate(I)]):
            assignment = dict(zip(I, combo))
            try:
                b = make_braid(curve, assignment)
            except ValueError:
                continue
            if mu_bound is not None and mu(curve, z0, b) > mu_bound:
                continue
            out.append(b)
    return sorted(set(out), key=lambda b: (braid_length(b), b.key()))
