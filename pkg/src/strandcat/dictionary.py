"""Transport between the affine category and strand categories on circles.

Marks a_1..a_n sit at (j-1)/n on a circle; a map σ goes to the braid whose
strand at a_j has lift displacement (σ(j)-j)/n. The four curve variants
(unoriented, dotted, oriented circle; unoriented, oriented interval cut at a
basepoint) pick out the positive and finite subcategories.
"""

from __future__ import annotations

import itertools
from fractions import Fraction as Frac

from . import affinecat, hecke
from .curve import Arc, Component, CurveModel, const_path, path, reg
from .f2core import F2Sum
from .strands import (Braid, differential, gamma_ctx, hom_braids, make_braid,
                      pair_i, strand_product, strand_product_nonsingular)

VARIANTS = ("full", "plus", "plusplus", "finite", "finiteplus")


def circle_model(n: int, variant: str) -> CurveModel:
    if variant == "full":
        comp = Component("circle", ())
    elif variant == "plus":
        lo = Frac(n - 1, n) + Frac(1, 3 * n)
        comp = Component("circle", (Arc(lo, Frac(1) - Frac(1, 3 * n), 1),))
    elif variant == "plusplus":
        comp = Component("circle", (), 1)
    elif variant == "finite":
        comp = Component("line", ())
    elif variant == "finiteplus":
        comp = Component("line", (), 1)
    else:
        raise ValueError(variant)
    return CurveModel((comp,), (), (), ())


def mark_point(curve: CurveModel, n: int, j: int):
    """a_j: position (j-1)/n on the circle, or plain j on the cut line."""
    if curve.components[0].kind == "circle":
        return reg(0, Frac(j - 1, n))
    return reg(0, Frac(j))


def braid_of_map(curve: CurveModel, n: int, s: affinecat.PeriodicMap) -> Braid:
    asg = {}
    for m in s.source.members:
        z = mark_point(curve, n, m)
        d = Frac(s(m) - m, n) if curve.components[0].kind == "circle" \
            else Frac(s(m) - m)
        asg[z] = const_path(curve, z) if d == 0 else path(0, z.coord, d)
    return make_braid(curve, asg)


def in_variant(s: affinecat.PeriodicMap, variant: str) -> bool:
    if variant == "full":
        return True
    window = s.source.members
    if variant == "plus":
        return all(s(m) >= 1 for m in window)
    if variant == "plusplus":
        return all(s(m) >= m for m in window)
    if variant == "finite":
        return all(1 <= s(m) <= s.n for m in window)
    if variant == "finiteplus":
        return all(m <= s(m) <= s.n for m in window)
    raise ValueError(variant)


def dictionary_check(n: int, variant: str, lmax: int, winding: int) -> dict:
    """Prop-level table isomorphism for one curve variant."""
    curve = circle_model(n, variant)
    failures = []
    homs = {}
    for size in range(n + 1):
        for members in itertools.combinations(range(1, n + 1), size):
            I = affinecat.SubsetZn(n, members)
            for members2 in itertools.combinations(range(1, n + 1), size):
                J = affinecat.SubsetZn(n, members2)
                maps = [s for s in affinecat.hom_maps(I, J, lmax, winding)
                        if in_variant(s, variant)]
                braids = {b.key(): b for s in maps
                          for b in [braid_of_map(curve, n, s)]}
                if len(braids) != len(maps):
                    failures.append(f"F not injective at {I}->{J}")
                # F is a bijection on the common displacement window
                window = {braid_of_map(curve, n, s).key() for s in maps
                          if all(abs(s(m) - m) <= n * winding for m in members)}
                pts_i = tuple(mark_point(curve, n, m) for m in members)
                pts_j = tuple(mark_point(curve, n, m) for m in members2)
                kept = set()
                for b in hom_braids(curve, pts_i, pts_j, winding):
                    ii = pair_i(curve, b)
                    if (sum(ii.values()) // 2 if ii else 0) > lmax:
                        continue
                    scale = n if curve.components[0].kind == "circle" else 1
                    if all(abs((p.disp if not p.is_const else 0) * scale)
                           <= n * winding for _, p in b.strands):
                        kept.add(b.key())
                if window != kept:
                    failures.append(f"F not bijective on the window at {I}->{J}")
                homs[(members, members2)] = maps
    icache: dict = {}
    braid_cache = {}
    len_cache = {}

    def bmap(s):
        if s not in braid_cache:
            braid_cache[s] = braid_of_map(curve, n, s)
            len_cache[s] = affinecat.length(s)
        return braid_cache[s]

    prod_count = 0
    for (mi, mj), maps in homs.items():
        for (mj2, mk), maps2 in homs.items():
            if mj != mj2:
                continue
            for s in maps:
                bs = bmap(s)
                ls = len_cache[s]
                for t in maps2:
                    bt = bmap(t)
                    if ls + len_cache[t] > lmax:
                        continue
                    ts = affinecat.graded_product(t, s)
                    got = strand_product_nonsingular(curve, bt, bs, icache)
                    expect = bmap(ts) if ts is not None else None
                    if (got is None) != (ts is None) or \
                            (got is not None and got != expect):
                        failures.append(f"product mismatch at {s}, {t}")
                    prod_count += 1
    d_count = 0
    for maps in homs.values():
        for s in maps:
            b = braid_of_map(curve, n, s)
            expect = F2Sum(braid_of_map(curve, n, t)
                           for t in affinecat.differential_map(s))
            if differential(curve, b) != expect:
                failures.append(f"differential mismatch at {s}")
            d_count += 1
    return {
        "check": "dictionary",
        "parameters": {"n": n, "variant": variant, "lmax": lmax,
                       "winding": winding},
        "status": "pass" if not failures else "fail",
        "counterexample": sorted(set(failures))[:3] or None,
        "products": prod_count,
        "differentials": d_count,
    }
