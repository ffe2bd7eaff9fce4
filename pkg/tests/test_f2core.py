import random

from hypothesis import given, settings
from hypothesis import strategies as st

from strandcat.f2core import DegreeData, F2Sum, GammaContext, check_d_squared
from strandcat.affinecat import GammaN


def test_f2sum_basics():
    x, y = F2Sum.of("x"), F2Sum.of("y")
    assert x + x == F2Sum.zero()
    assert F2Sum.zero() + y == y
    assert (x + y).sorted_terms() == ["x", "y"]
    assert not F2Sum()
    assert len(F2Sum(["a", "b", "a"])) == 1


@given(st.lists(st.sampled_from("abcdef"), max_size=12),
       st.lists(st.sampled_from("abcdef"), max_size=12),
       st.lists(st.sampled_from("abcdef"), max_size=12))
def test_f2sum_group_laws(a, b, c):
    x, y, z = F2Sum(a), F2Sum(b), F2Sum(c)
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + x == F2Sum.zero()


def test_check_d_squared_zero_map():
    assert check_d_squared(["x", "y"], lambda t: F2Sum()) == []


def test_check_d_squared_flags_offender():
    d = {"x": F2Sum.of("y"), "y": F2Sum.of("z"), "z": F2Sum()}
    assert check_d_squared(["x", "y", "z"], lambda t: d[t]) == ["x"]


def test_check_d_squared_rejects_unknown_token():
    try:
        check_d_squared(["x"], lambda t: F2Sum.of("w"))
    except ValueError:
        return
    raise AssertionError("expected ValueError")


def _random_degree(rng, ctx):
    mas = {0: rng.randint(-3, 3)}
    m = {("e", rng.randrange(ctx.n)): rng.randint(-2, 2)}
    r = {("a", rng.randrange(ctx.n)): rng.randint(-2, 2),
         ("a", rng.randrange(ctx.n)): rng.randint(-2, 2)}
    return DegreeData.make(mas, m, r)


def test_gamma_identity_and_associativity():
    ctx = GammaN(4)
    rng = random.Random(11)
    e = DegreeData.make({}, {}, {})
    for _ in range(1000):
        g, h, k = (_random_degree(rng, ctx) for _ in range(3))
        assert ctx.mul(g, e) == g and ctx.mul(e, g) == g
        assert ctx.mul(ctx.mul(g, h), k) == ctx.mul(g, ctx.mul(h, k))
        assert ctx.mul(g, ctx.inv(g)) == e


def test_pairing_vanishes_on_disjoint_support():
    # α, β supported on residues far apart: <α,β> = 0, so m-parts add
    ctx = GammaN(6)
    g = DegreeData.make({}, {}, {("a", 0): 1})
    h = DegreeData.make({}, {}, {("a", 3): 1})
    prod = ctx.mul(g, h)
    assert prod.mpart == ()
    assert dict(prod.rpart) == {("a", 0): 1, ("a", 3): 1}


def test_pairing_biadditive():
    ctx = GammaN(5)
    rng = random.Random(3)
    for _ in range(200):
        a = {("a", rng.randrange(5)): rng.randint(-2, 2)}
        b = {("a", rng.randrange(5)): rng.randint(-2, 2)}
        c = {("a", rng.randrange(5)): rng.randint(-2, 2)}
        ab = {k: a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)}
        lhs = ctx.pair(ab, c)
        rhs = {}
        for d in (ctx.pair(a, c), ctx.pair(b, c)):
            for k, v in d.items():
                rhs[k] = rhs.get(k, 0) + v
        rhs = {k: v for k, v in rhs.items() if v}
        assert {k: v for k, v in lhs.items() if v} == rhs
