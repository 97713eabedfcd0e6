from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleycurv.curvature import (
    UndefinedAtIdentity,
    automorphic_graph_neighbors,
    avg_conj_length,
    ball_comparison,
    ball_from_sphere,
    curvature_report,
    graph_laplacian_check,
    kappa,
    kappa_r,
    spherical_comparison,
)
from cayleycurv.groups import (
    make_abelian,
    make_free,
    make_heisenberg,
    make_product,
    make_symmetric,
    make_z2_rtimes_z6,
)
from cayleycurv.metric import WordMetric

F2 = make_free(2)
MF2 = WordMetric(F2, 6)
F2XZ = make_product(make_free(2), make_abelian(1, ["z"]))
MXZ = WordMetric(F2XZ, 0)


def test_free_average():
    for g in MF2.ball(4)[1:]:
        assert avg_conj_length(MF2, g) == len(g) + 1
    assert kappa(MF2, F2.parse_word("a b")) == Fraction(-1, 2)


def test_f2xz_values():
    a = F2XZ.parse_word("a")
    assert avg_conj_length(MXZ, a) == Fraction(5, 3)
    assert kappa(MXZ, a) == Fraction(-2, 3)
    assert kappa(MXZ, F2XZ.parse_word("b")) == Fraction(-2, 3)


def test_symmetric_pos_value():
    S = make_symmetric(4, "pos")
    assert avg_conj_length(WordMetric(S, 0), S.sigma) == Fraction(26, 21)


def test_semidirect_ab():
    # |ab| = 2 here, not 3, so the value differs from the n >= 2 closed form
    G = make_z2_rtimes_z6()
    M = WordMetric(G, 6)
    ab = G.parse_word("a b")
    assert M.length(ab) == 2
    assert avg_conj_length(M, ab) == Fraction(5, 3)
    assert kappa(M, ab) == Fraction(1, 6)


def test_identity_undefined():
    with pytest.raises(UndefinedAtIdentity):
        kappa(MF2, F2.identity())
    with pytest.raises(UndefinedAtIdentity):
        kappa_r(MF2, F2.identity(), 1, "ball")


def test_comparisons():
    a, b = F2.parse_word("a"), F2.parse_word("b")
    assert spherical_comparison(MF2, a, a, 2) == 0
    assert ball_comparison(MF2, a, a, 2) == 0
    assert ball_comparison(MF2, a, b, 0) == 2
    assert spherical_comparison(MF2, F2.identity(), a, 1) == 2
    Z2 = make_abelian(2)
    MZ = WordMetric(Z2, 4)
    x, y = Z2.from_coords([1, -2]), Z2.from_coords([4, 0])
    for r in (1, 2, 3):
        assert spherical_comparison(MZ, x, y, r) == 5
        assert ball_comparison(MZ, x, y, r) == 5
    assert kappa_r(MZ, Z2.from_coords([3, 0]), 2, "sphere") == 0


def test_f2xz_ball_convention():
    a = F2XZ.parse_word("a")
    e = F2XZ.identity()
    M = WordMetric(F2XZ, 2)
    ball = ball_comparison(M, e, a, 1)
    assert ball == Fraction(11, 7)
    assert kappa_r(M, a, 1, "ball") == Fraction(-4, 7)
    assert ball == ball_from_sphere(1, spherical_comparison(M, e, a, 1), F2XZ.size)


def test_central_zero_all_radii():
    z = F2XZ.parse_word("z^3")
    M = WordMetric(F2XZ, 3)
    for r in (1, 2, 3):
        assert kappa_r(M, z, r, "sphere") == 0
        assert kappa_r(M, z, r, "ball") == 0


def test_laplacian_examples():
    rep = graph_laplacian_check(MF2, F2.parse_word("a b"))
    assert rep.laplacian == -1 and rep.kappa == Fraction(-1, 2)
    rep = graph_laplacian_check(MXZ, F2XZ.parse_word("a"))
    assert rep.laplacian == Fraction(-2, 3)
    Z2 = make_abelian(2)
    rep = graph_laplacian_check(WordMetric(Z2, 0), Z2.from_coords([2, 3]))
    assert rep.laplacian == 0 and rep.kappa == 0


def test_automorphic_neighbors():
    Z2 = make_abelian(2)
    g = Z2.from_coords([1, 2])
    assert automorphic_graph_neighbors(Z2, Z2.gens, g) == [g] * 4
    a = F2.parse_word("a")
    got = automorphic_graph_neighbors(F2, F2.gens, a)
    want = [a, a, F2.parse_word("b^-1 a b"), F2.parse_word("b a b^-1")]
    assert got == want
    G = make_z2_rtimes_z6()
    assert automorphic_graph_neighbors(G, [G.parse_word("t")], G.parse_word("a")) == [G.parse_word("a b")]


def test_report_row():
    row = curvature_report(MF2, F2.parse_word("a b")).as_row()
    assert row["kappa"] == "-1/2" and row["sign"] == "-" and row["kappa_approx"] == "-0.500000"


H = make_heisenberg()
MH = WordMetric(H, 10)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10 ** 6))
def test_range_and_sign_agreement(n, pick):
    shell = MH.sphere(n)
    g = shell[pick % len(shell)]
    k = kappa(MH, g)
    assert k <= 1
    assert abs(k) <= Fraction(2, n)
    assert (kappa_r(MH, g, 1, "ball") > 0) == (k > 0)
    assert (kappa_r(MH, g, 1, "ball") < 0) == (k < 0)
    graph_laplacian_check(MH, g)


def test_generators_nonpositive():
    for group in (F2, H, make_z2_rtimes_z6(), make_symmetric(5, "neg")):
        M = WordMetric(group, 3)
        assert all(kappa(M, s) <= 0 for s in group.gens)


def test_complete_graph_zero():
    S = make_symmetric(4, "all")
    M = WordMetric(S, 0)
    assert all(kappa(M, g) == 0 for g in S.elements() if g != S.identity())
