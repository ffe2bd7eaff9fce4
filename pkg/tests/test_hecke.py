import itertools
import random

from strandcat import hecke as H
from strandcat.f2core import F2Sum, check_d_squared


def test_lengths():
    assert H.length(H.identity_perm(3)) == 0
    assert H.length(H.AffinePerm(2, (2, 3))) == 0  # the shift c
    assert H.length(H.AffinePerm(2, (4, 3))) == 1


def test_length_floor_equals_crossing_count():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 4)
        u = list(range(1, n + 1))
        rng.shuffle(u)
        images = tuple(u[i] + n * rng.randint(-2, 2) for i in range(n))
        try:
            s = H.AffinePerm(n, images)
        except ValueError:
            continue
        assert H.length(s) == len(H.affine_inversions(s))


def test_mult_examples():
    t1 = H.elem("H", 3, H.simple(3, 1))
    t2 = H.elem("H", 3, H.simple(3, 2))
    assert not H.mult(t1, t1)  # T_i^2 = 0
    e = H.elem("H", 3, H.identity_perm(3))
    assert H.mult(e, t1) == t1
    t12 = H.mult(t1, t2)
    assert t12.sum.sorted_terms() == [H.perm_mul(H.simple(3, 1), H.simple(3, 2))]


def test_differential_examples():
    t1 = H.elem("H", 2, H.simple(2, 1))
    assert H.differential(t1).sum.sorted_terms() == [H.identity_perm(2)]
    e = H.elem("H", 2, H.identity_perm(2))
    assert not H.differential(e)
    w3 = H.elem("H", 3, H.longest_perm(3))
    got = {w.images for w in H.differential(w3).sum}
    assert got == {(2, 3, 1), (3, 1, 2)}  # s1s2 and s2s1


def test_finite_covers_match_bruhat_oracle():
    for n in (2, 3, 4):
        for w in H.all_perms(n):
            got = set(H.differential(H.elem("H", n, w)).sum.sorted_terms())
            oracle = {u for u in H.all_perms(n)
                      if H.length(u) == H.length(w) - 1 and H.bruhat_leq(u, w)}
            assert got == oracle


def test_trace_examples():
    w3 = H.elem("H", 3, H.longest_perm(3))
    assert H.trace("+", 2, 1, w3).sum.sorted_terms() == [H.Perm((2, 1))]
    e3 = H.elem("H", 3, H.identity_perm(3))
    assert not H.trace("+", 2, 1, e3)
    # t^+_{n,n} is the identity (the trivial parabolic case)
    for w in H.all_perms(3):
        x = H.elem("H", 3, w)
        assert H.trace("+", 3, 0, x) == x


def test_dual_basis_pairing_examples():
    mat, clean = H.dual_basis_pairing("+", 2, 1)
    assert clean and mat == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    mat, clean = H.dual_basis_pairing("+", 0, 0)
    assert clean and mat == [[1]]
    mat, clean = H.dual_basis_pairing("-", 1, 2)
    assert clean and all(mat[i][j] == (i == j)
                         for i in range(6) for j in range(6))


def test_bimodule_action_examples():
    # unit action
    e2 = H.elem("H", 2, H.identity_perm(2))
    e1 = H.elem("H", 1, H.identity_perm(1))
    x = H.elem("H", 3, H.Perm((2, 1, 3)))
    got = H.bimodule_action("L+", 1, 2, (e1, e2), x,
                            H.elem("H", 3, H.identity_perm(3)))
    assert got == x
    # L+(1,2): T_1 of the H_2 factor acts by f_1(iota_2(T_1)) = T_2
    t1 = H.elem("H", 2, H.simple(2, 1))
    e3 = H.elem("H", 3, H.identity_perm(3))
    got = H.bimodule_action("L+", 1, 2, (e1, t1), e3, e3)
    assert got.sum.sorted_terms() == [H.simple(3, 2)]
    # degenerate guard: H_1 has no T_1 (empty sum acts as zero)
    zero = H.NilHeckeElem("H", 1, F2Sum())
    got = H.bimodule_action("L+", 1, 1,
                            (zero, e1), H.elem("H", 2, H.identity_perm(2)),
                            H.elem("H", 2, H.identity_perm(2)))
    assert not got


def test_leibniz_small():
    for n in (2, 3):
        basis = list(H.all_perms(n))
        for a, b in itertools.product(basis, repeat=2):
            xa, xb = H.elem("H", n, a), H.elem("H", n, b)
            lhs = H.differential(H.mult(xa, xb))
            rhs = H.mult(H.differential(xa), xb) + H.mult(xa, H.differential(xb))
            assert lhs == rhs


def test_affine_d_squared_small():
    ball = H.affine_ball(2, 4, 2)
    assert not check_d_squared(ball, H.basis_d)


def test_positive_presentation_examples():
    cI = H.c_I(2, (1,))
    assert cI(1) == 3  # c_{{1}} = c s_1
    assert cI.images == (3, 2)
    rep = H.positive_presentation_check(2, 3)
    assert rep["status"] == "pass"
    rep = H.positive_presentation_check(3, 2)
    assert rep["status"] == "pass"
    # the bijection covers exactly the positive window
    assert rep["count"] == len(H.positive_elements(3, 2))


def test_c_degree_and_positivity():
    c = H.shift_c(3)
    assert c.c_degree() == 1 and c.is_positive()
    assert H.AffinePerm(3, (4, 2, 3)).c_degree() == 1
    assert H.AffinePerm(3, (0, 2, 4)).is_positive() is False
