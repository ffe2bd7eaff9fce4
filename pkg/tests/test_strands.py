import itertools
import random
from fractions import Fraction as F

import pytest

from strandcat import curve as C, strands as S
from strandcat.f2core import F2Sum
from strandcat.selftest import random_diagrams, torus_diagram


def line():
    return C.CurveModel((C.Component("line", ()),), (), (), ())


def pts(n):
    return tuple(C.reg(0, F(i)) for i in range(1, n + 1))


def crossing_braid(cur):
    return S.make_braid(cur, {
        C.reg(0, F(1)): C.path(0, F(1), F(1)),
        C.reg(0, F(2)): C.path(0, F(2), F(-1))})


def test_precompose_examples():
    cur = line()
    tau = crossing_braid(cur)
    ident = S.identity_braid(cur, pts(2))
    assert S.precompose(cur, tau, ident) == tau
    tt = S.precompose(cur, tau, tau)
    assert tt == ident  # composite exists in the pre-strand category
    assert S.strand_product(cur, tau, tau) is None  # but dies by degree
    with pytest.raises(ValueError):
        S.precompose(cur, tau, S.identity_braid(cur, pts(3)))


def test_degree_defect_examples():
    cur = line()
    tau = crossing_braid(cur)
    ident = S.identity_braid(cur, pts(2))
    assert S.degree_defect(cur, tau, ident) == {}
    assert S.degree_defect(cur, ident, tau) == {}
    d = S.degree_defect(cur, tau, tau)
    assert d and all(v > 0 for v in d.values())
    far = S.make_braid(cur, {
        C.reg(0, F(1)): C.path(0, F(1), F(1)),
        C.reg(0, F(5)): C.path(0, F(5), F(1))})
    far2 = S.make_braid(cur, {
        C.reg(0, F(2)): C.path(0, F(2), F(-1)),
        C.reg(0, F(6)): C.path(0, F(6), F(-1))})
    assert S.degree_defect(cur, far2, far) == {}


def test_resolve_and_differential():
    cur = line()
    tau = crossing_braid(cur)
    crs = [c for c in S.crossing_set(cur, tau) if c.in_d]
    assert len(crs) == 2  # one orbit of the involution
    res = S.resolve(cur, tau, crs[0])
    assert res == S.identity_braid(cur, pts(2))
    assert res == S.resolve(cur, tau, crs[1])  # theta^zeta = theta^{zeta^{-1}}
    d = S.differential(cur, tau)
    assert d == F2Sum.of(S.identity_braid(cur, pts(2)))
    assert not S.differential(cur, S.identity_braid(cur, pts(2)))
    assert S.crossing_set(cur, res) == []  # identities never cross
    # a double crossing resolves once and keeps one crossing
    circ = C.CurveModel((C.Component("circle", ()),), (), (), ())
    theta = S.make_braid(circ, {
        C.reg(0, F(0)): C.path(0, F(0), F(1, 2)),
        C.reg(0, F(1, 2)): C.path(0, F(1, 2), F(-3, 2))})
    crs2 = [c for c in S.crossing_set(circ, theta) if c.in_d
            and c.s1.key() < c.s2.key()]
    assert crs2
    resolved = S.resolve(circ, theta, crs2[0])
    assert len([c for c in S.crossing_set(circ, resolved)
                if c.s1.key() < c.s2.key()]) == \
        len([c for c in S.crossing_set(circ, theta)
             if c.s1.key() < c.s2.key()]) - 1


def test_d_squared_and_leibniz_random():
    rng = random.Random(4)
    for cur in random_diagrams(21, 6):
        zpts = sorted({cur.project(c, x) for (c, x) in cur.mark_pos},
                      key=lambda z: z.key())[:2]
        if not zpts:
            continue
        homs = S.hom_braids(cur, tuple(zpts), tuple(zpts), 1)[:25]
        for b in homs:
            assert not S.differential_sum(cur, S.differential(cur, b))
        for g in homs[:8]:
            for f in homs[:8]:
                lhs = S.differential_sum(
                    cur, S.product_sum(cur, F2Sum.of(g), F2Sum.of(f)))
                rhs = S.product_sum(cur, S.differential(cur, g), F2Sum.of(f)) + \
                    S.product_sum(cur, F2Sum.of(g), S.differential(cur, f))
                assert lhs == rhs


def test_associativity_random():
    rng = random.Random(8)
    for cur in random_diagrams(33, 4):
        zpts = sorted({cur.project(c, x) for (c, x) in cur.mark_pos},
                      key=lambda z: z.key())[:2]
        if not zpts:
            continue
        homs = S.hom_braids(cur, tuple(zpts), tuple(zpts), 1)[:10]
        for a, b, c in itertools.product(homs, repeat=3):
            x = S.strand_product(cur, a, b)
            lhs = S.strand_product(cur, x, c) if x is not None else None
            y = S.strand_product(cur, b, c)
            rhs = S.strand_product(cur, a, y) if y is not None else None
            assert lhs == rhs


def test_components_decompose():
    # Hom sets of a disjoint union are smash products of the factors
    one = C.CurveModel((C.Component("line", ()),), (), (), ())
    two = C.CurveModel((C.Component("line", ()), C.Component("line", ())),
                       (), (), ())
    p1 = (C.reg(0, F(1)), C.reg(0, F(2)))
    p2 = (C.reg(1, F(1)), C.reg(1, F(2)))
    h1 = S.hom_braids(one, pts(2), pts(2), 0)
    joint = S.hom_braids(two, p1 + p2, p1 + p2, 0)
    assert len(joint) == len(h1) ** 2
    # products factor through the pieces
    cnt = 0
    for g in joint[:6]:
        for f in joint[:6]:
            gf = S.strand_product(two, g, f)
            g1 = S.make_braid(two, {z: p for z, p in g.strands if z.comp == 0})
            f1 = S.make_braid(two, {z: p for z, p in f.strands if z.comp == 0})
            g2 = S.make_braid(two, {z: p for z, p in g.strands if z.comp == 1})
            f2 = S.make_braid(two, {z: p for z, p in f.strands if z.comp == 1})
            p1p = S.strand_product(two, g1, f1)
            p2p = S.strand_product(two, g2, f2)
            if gf is None:
                assert p1p is None or p2p is None
            else:
                assert p1p is not None and p2p is not None
                cnt += 1
    assert cnt


def test_factorize_examples():
    circ1 = C.CurveModel((C.Component("circle", ()),), ("m",), ((0, F(0)),), ())
    m = C.reg(0, F(0))
    z0 = C.reg(0, F(1, 2))
    b = S.make_braid(circ1, {m: C.path(0, F(0), F(2))})
    rp, r = S.factorize(circ1, (m,), z0, b)
    assert S.mu(circ1, z0, r) == 1 and S.mu(circ1, z0, rp) == 1
    assert S.strand_product(circ1, rp, r) == b
    with pytest.raises(ValueError):
        S.factorize(circ1, (m,), z0, S.make_braid(circ1, {m: C.path(0, F(0), F(1))}))


def test_pullback_properties():
    torus = torus_diagram()
    z1 = torus.zpoint_of_mark("1")
    idb = S.identity_braid(torus, [z1])
    lifted = S.pullback(torus, F2Sum.of(idb))
    assert len(lifted) == 2  # the two constant lifts at a singular point
    # pullback is compatible with composition on samples
    z2 = torus.zpoint_of_mark("2")
    homs12 = S.hom_braids(torus, (z1,), (z2,), 0)
    homs21 = S.hom_braids(torus, (z2,), (z1,), 0)
    cover = torus.without_matching()
    for g in homs21:
        for f in homs12:
            gf = S.strand_product(torus, g, f)
            lhs = S.pullback(torus, F2Sum.of(gf) if gf is not None else F2Sum())
            rhs = S.product_sum(cover, S.pullback(torus, F2Sum.of(g)),
                                S.pullback(torus, F2Sum.of(f)))
            assert lhs == rhs


def test_fast_product_agrees_with_general():
    rng = random.Random(12)
    for cur in random_diagrams(77, 8):
        if cur.matching:
            continue
        zpts = sorted({cur.project(c, x) for (c, x) in cur.mark_pos},
                      key=lambda z: z.key())[:3]
        homs = S.hom_braids(cur, tuple(zpts), tuple(zpts), 1)[:12]
        for g in homs:
            for f in homs:
                assert S.strand_product(cur, g, f) == \
                    S.strand_product_nonsingular(cur, g, f)
