"""Serializable multiplication/differential tables for the CLI and service.

Basis tokens are serialized as sorted strand tuples "(comp, start, end, wind)"
with rational coordinates as "p/q"; permutation tokens by their window images.
Rows are emitted in a deterministic order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction as Frac

from . import affinecat, hecke
from .curve import CurveModel, dst, frac_str
from .strands import (Braid, braid_length, differential, hom_braids, mu,
                      strand_product)


def _perm_token(w) -> str:
    if isinstance(w, hecke.AffinePerm):
        return "(" + ",".join(str(v) for v in w.images) + ")"
    return "(" + ",".join(str(v) for v in w.images) + ")"


def hecke_tables(n: int, affine: bool = False, lmax: int = 3,
                 cbound: int = 1) -> dict:
    """Basis, products and differentials of H_n or the truncated Ĥ_n."""
    if affine:
        basis = list(hecke.affine_ball(n, lmax, cbound))
        ambient = "Hhat"
    else:
        basis = sorted(hecke.all_perms(n), key=lambda w: (hecke.length(w), w.images))
        ambient = "H"
    index = {w: i for i, w in enumerate(basis)}
    rows = [{"token": _perm_token(w), "length": hecke.length(w)} for w in basis]
    products = []
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            ab = hecke.basis_mul(a, b)
            products.append([i, j, index.get(ab) if ab is not None else None])
    diffs = []
    for i, a in enumerate(basis):
        diffs.append([i, sorted(index[t] for t in hecke.basis_d(a)
                                if t in index)])
    return {"n": n, "ambient": ambient, "basis": rows,
            "products": products, "differentials": diffs}


def affine_tables(n: int) -> dict:
    """The strands algebra A(n): basis, products, differentials."""
    table = affinecat.strands_algebra(n)
    basis = []
    for b in table["basis"]:
        basis.append({
            "source": list(b.source.members),
            "target": list(b.target.members),
            "images": list(b.images),
            "length": affinecat.length(b),
        })
    products = [[i, j, k] for (i, j), k in sorted(table["products"].items())]
    diffs = [[i, ks] for i, ks in sorted(table["differentials"].items())]
    return {"n": n, "dimension": len(basis), "basis": basis,
            "products": products, "differentials": diffs}


def braid_token(curve: CurveModel, b: Braid) -> str:
    parts = []
    for z, p in b.strands:
        if p.is_const:
            lift = (curve.lifts(z)[0][0], curve.lifts(z)[0][1],
                    curve.lifts(z)[0][1])
            comp, start, end = lift
            wind = Frac(0)
        else:
            comp, start, end = p.comp, p.start, p.end
            wind = p.disp
        parts.append(f"({comp},{frac_str(start)},{frac_str(end)},{frac_str(wind)})")
    return "[" + ";".join(sorted(parts)) + "]"


def algebra_tables(curve: CurveModel, object_marks: list, mu_bound: int,
                   winding: int, lmax=None, max_strands: int = 1) -> dict:
    """Hom tables of the strand category on subsets of the given marks."""
    points = [curve.zpoint_of_mark(m) for m in object_marks]
    objs = []
    for k in range(1, max_strands + 1):
        objs += [tuple(c) for c in itertools.combinations(points, k)]
    basis = []
    seen = set()
    for I in objs:
        for J in objs:
            if len(I) != len(J):
                continue
            for b in hom_braids(curve, I, J, winding):
                if b.key() in seen:
                    continue
                if lmax is not None and braid_length(b) > lmax:
                    continue
                if 2 * braid_length(b) > 2 * mu_bound + 1:
                    # total length plays the role of the μ bound on tables
                    continue
                seen.add(b.key())
                basis.append(b)
    basis.sort(key=lambda b: (braid_length(b), b.key()))
    index = {b.key(): i for i, b in enumerate(basis)}
    rows = [{"token": braid_token(curve, b),
             "sources": [z.key()[0] + ":" + (frac_str(z.coord) if z.kind == "reg"
                                             else str(int(z.coord)))
                         for z in b.sources()],
             "length": frac_str(braid_length(b))} for b in basis]
    products = []
    for i, g in enumerate(basis):
        for j, f in enumerate(basis):
            try:
                gf = strand_product(curve, g, f)
            except ValueError:
                continue
            products.append([i, j, index.get(gf.key()) if gf is not None else None])
    diffs = []
    for i, b in enumerate(basis):
        ks = sorted(index[t.key()] for t in differential(curve, b)
                    if t.key() in index)
        diffs.append([i, ks])
    return {"objects": [[z.key()[0], str(z.coord)] for z in points],
            "dimension": len(basis), "basis": rows,
            "products": products, "differentials": diffs}
