import json
from fractions import Fraction as F

import pytest

from strandcat import curve as C
from strandcat.selftest import circle_diagram, torus_diagram


def line(orient=0):
    return C.CurveModel((C.Component("line", (), orient),), (), (), ())


def circle(orient=0):
    return C.CurveModel((C.Component("circle", (), orient),), (), (), ())


def test_parse_round_trip():
    text = C.diagram_to_json(torus_diagram())
    again = C.diagram_from_json(text)
    assert again == torus_diagram()


def test_parse_rejects_unknown_keys():
    with pytest.raises(ValueError):
        C.diagram_from_json(json.dumps({"components": [], "bogus": 1}))
    with pytest.raises(ValueError):
        C.diagram_from_json(json.dumps(
            {"components": [{"kind": "interval", "frobnicate": True}]}))


def test_parse_rejects_higher_valence():
    data = {
        "components": [{"id": "c0", "kind": "interval", "orientation": "+",
                        "marks": [{"id": "1", "at": "1"}, {"id": "2", "at": "2"},
                                  {"id": "3", "at": "3"}]}],
        "matching": [["1", "2"], ["2", "3"]],
    }
    with pytest.raises(ValueError):
        C.diagram_from_json(json.dumps(data))


def test_matched_marks_must_be_oriented():
    with pytest.raises(ValueError):
        C.CurveModel((C.Component("line", ()),), ("1", "2"),
                     ((0, F(0)), (0, F(1))), ((0, 1),))


def test_nonsingular_cover():
    torus = torus_diagram()
    cover = torus.without_matching()
    assert cover.matching == ()
    assert len(cover.components) == 1
    # unmatched model is its own cover
    assert line().without_matching() == line()
    # projection identifies matched marks
    assert torus.project(0, F(1)) == torus.project(0, F(3))
    assert torus.project(0, F(1)) != torus.project(0, F(2))


def test_compose_paths_examples():
    cur = line()
    a = C.cover_path(cur, 0, F(0), F(1))
    b = C.cover_path(cur, 0, F(1), F(2))
    assert C.compose_paths(cur, b, a) == C.cover_path(cur, 0, F(0), F(2))
    idp = C.const_path(cur, C.reg(0, F(0)))
    assert C.compose_paths(cur, a, idp) == a
    # torus diagram: the relations come from non-matching cover lifts
    torus = torus_diagram()
    alpha = C.cover_path(torus, 0, F(3), F(4))
    beta = C.cover_path(torus, 0, F(2), F(3))
    assert C.compose_paths(torus, beta, alpha) is None
    # backtracking composite collapses to a constant
    back = C.compose_paths(cur, a.inverse(), a)
    assert back is not None and back.is_const


def test_intersection_examples():
    cur = line()
    a = C.cover_path(cur, 0, F(0), F(1))
    b = C.cover_path(cur, 0, F(1), F(0))
    assert C.intersection_count(cur, a, b) == 1
    circ = circle()
    ca = C.cover_path(circ, 0, F(0), F(5, 4))
    cb = C.cover_path(circ, 0, F(1, 2), F(3, 4))
    assert C.intersection_count(circ, ca, cb) == 1
    mid = C.const_path(cur, C.reg(0, F(1, 2)))
    assert C.intersection_count(cur, a, mid) == 1
    for (x, y) in ((a, b), (ca, cb), (a, mid)):
        assert C.intersection_count_sampler(cur if x is not ca else circ, x, y) \
            == C.intersection_count(cur if x is not ca else circ, x, y)


def test_intersection_precondition():
    cur = line()
    a = C.cover_path(cur, 0, F(0), F(1))
    b = C.cover_path(cur, 0, F(0), F(2))
    with pytest.raises(ValueError):
        C.intersection_count(cur, a, b)


def test_tangential_multiplicities():
    cur = line()
    idp = C.const_path(cur, C.reg(0, F(0)))
    assert C.tangential_multiplicity(cur, 0, F(0), 1, "+", idp) == 0
    p = C.cover_path(cur, 0, F(0), F(2))
    assert C.tangential_multiplicity(cur, 0, F(1), 1, "+", p) == 1
    assert C.tangential_multiplicity(cur, 0, F(1), -1, "-", p) == 1
    circ = circle()
    w2 = C.cover_path(circ, 0, F(0), F(9, 4))
    assert C.tangential_multiplicity(circ, 0, F(1, 2), 1, "+", w2) == 2


def test_m_additive_under_composition():
    cur = line()
    a = C.cover_path(cur, 0, F(0), F(1))
    b = C.cover_path(cur, 0, F(1), F(3))
    ab = C.compose_paths(cur, b, a)
    for (u, side) in ((F(1, 2), 1), (F(2), 1), (F(1), -1)):
        ma = C.tangential_multiplicity(cur, 0, u, side, "+", a) - \
            C.tangential_multiplicity(cur, 0, u, side, "-", a)
        mb = C.tangential_multiplicity(cur, 0, u, side, "+", b) - \
            C.tangential_multiplicity(cur, 0, u, side, "-", b)
        mab = C.tangential_multiplicity(cur, 0, u, side, "+", ab) - \
            C.tangential_multiplicity(cur, 0, u, side, "-", ab)
        assert ma + mb == mab


def test_connecting_classes_examples():
    cur = line()
    a = C.cover_path(cur, 0, F(0), F(1))
    b = C.cover_path(cur, 0, F(1), F(0))
    conns = C.connecting_classes(cur, a, b)
    assert len(conns) == 2 * C.intersection_count(cur, a, b)
    # disjoint supports: empty
    c = C.cover_path(cur, 0, F(5), F(6))
    assert C.connecting_classes(cur, a, c) == []
    # identity versus a crossing path at its midpoint: the two half connectors
    mid = C.const_path(cur, C.reg(0, F(1, 2)))
    assert len(C.connecting_classes(cur, a, mid)) == 2


def test_admissibility_orientation():
    cur = line(1)
    assert C.is_admissible(cur, C.cover_path(cur, 0, F(0), F(1)))
    assert not C.is_admissible(cur, C.cover_path(cur, 0, F(1), F(0)))
    dotted = C.CurveModel(
        (C.Component("line", (C.Arc(F(0), F(1), 1),)),), (), (), ())
    assert not C.is_admissible(dotted, C.cover_path(dotted, 0, F(2), F(1, 2)))
    assert C.is_admissible(dotted, C.cover_path(dotted, 0, F(2), F(3, 2)))


def test_circle_algebra_counts():
    cur = circle_diagram()
    c1 = cur.zpoint_of_mark("m0")
    homs = C.admissible_classes(cur, c1, c1, 2)
    lengths = sorted(int(4 * abs(p.disp)) for p in homs if 4 * abs(p.disp) <= 8)
    assert lengths == [0, 2, 2, 4, 4, 6, 6, 8, 8]
