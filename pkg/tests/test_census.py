from fractions import Fraction

import pytest

from cayleycurv.census import (
    ConditionNotMet,
    NotNormal,
    OutsideRegion,
    average_kappa,
    census_rows,
    damping_bound,
    embedding_check,
    free_group_average_closed_form,
    heisenberg_lowheight_predict,
    heisenberg_sector_verify,
    kappa_table,
    negembed_homomorphic_check,
    product_av,
    shell_flux,
    sign_census,
    zero_gen_equivalence,
    zhaszeroes_check,
)
from cayleycurv.curvature import avg_conj_length, kappa
from cayleycurv.groups import (
    make_abelian,
    make_dihedral_inf,
    make_free,
    make_free_product_free,
    make_heisenberg,
    make_product,
    make_symmetric,
    make_z2_rtimes_z6,
)
from cayleycurv.metric import WordMetric


def test_sign_census_abelian_and_free():
    MZ = WordMetric(make_abelian(2), 6)
    c = sign_census(MZ, 6)
    assert (c.positive, c.zero, c.negative) == (0, c.ball_size - 1, 0)
    MF = WordMetric(make_free(2), 5)
    c = sign_census(MF, 5)
    assert (c.positive, c.zero, c.negative) == (0, 0, c.ball_size - 1)
    assert sum(c.proportions) == Fraction(c.ball_size - 1, c.ball_size)


def test_average_kappa():
    for m in (1, 2, 3):
        M = WordMetric(make_abelian(m), 5)
        assert average_kappa(M, 5) == 0
    MF = WordMetric(make_free(2), 6)
    for n in range(1, 7):
        assert average_kappa(MF, n) == free_group_average_closed_form(2, n)


def test_census_rows_cumulative():
    MF = WordMetric(make_free(2), 4)
    rows = census_rows(MF, 4)
    assert [r.ball_size for r in rows] == [1, 5, 17, 53, 161]
    assert rows[0].average_kappa == 0
    assert rows[-1].negative == 160


def test_damping_bound_holds_on_free():
    MF = WordMetric(make_free(2), 7)
    K = kappa_table(MF, 7)
    for n in range(2, 8):
        avg = abs(average_kappa(MF, n, K))
        for k in range(1, n):
            assert avg <= damping_bound(MF.table.ball_size(k), MF.table.ball_size(n), k)


def test_predictor_examples():
    assert heisenberg_lowheight_predict(5, 1, 6) == "+"
    assert heisenberg_lowheight_predict(5, 1, 10) == "-"
    assert heisenberg_lowheight_predict(5, 1, 8) == "0"
    with pytest.raises(OutsideRegion):
        heisenberg_lowheight_predict(5, 1, 40)


def test_sector_verify():
    H = make_heisenberg()
    M = WordMetric(H, 14)
    rep = heisenberg_sector_verify(M, 5)
    assert rep.passed and sum(rep.details["checked"].values()) == 0
    # A = 3, B = 1 already lies in the sector: (3, 1, C) for C <= 3 has length 6
    rep = heisenberg_sector_verify(M, 6)
    assert rep.passed and rep.details["checked"] == {"+": 1, "0": 1, "-": 1}
    rep = heisenberg_sector_verify(M, 12)
    assert rep.passed and all(v > 0 for v in rep.details["checked"].values())


def test_zero_gen_equivalence():
    S = make_symmetric(4, "all")
    rep = zero_gen_equivalence(WordMetric(S, 0))
    assert rep.passed and rep.details["all_av_one"] and rep.details["conjugation_closed"]
    D = make_dihedral_inf()
    rep = zero_gen_equivalence(WordMetric(D, 4))
    assert rep.passed and not rep.details["all_av_one"] and not rep.details["conjugation_closed"]
    assert any(w[-1] == 3 for w in rep.witnesses if len(w) == 4)
    rep = zero_gen_equivalence(WordMetric(make_abelian(2), 0))
    assert rep.passed and rep.details["all_av_one"]


def test_shell_flux_identities():
    for G, R in ((make_free(2), 7), (make_dihedral_inf(), 9), (make_heisenberg(), 11)):
        sf = shell_flux(WordMetric(G, R))
        assert sf.checked_c > 0 and sf.checked_k > 0


def test_product_av_examples():
    F2, Z = make_free(2), make_abelian(1, ["z"])
    M1, M2 = WordMetric(F2, 3), WordMetric(Z, 3)
    assert product_av(M1, M2, F2.parse_word("a"), Z.identity()) == Fraction(5, 3)
    assert product_av(M1, M2, F2.identity(), Z.identity()) == 0
    P = make_product(F2, Z)
    MP = WordMetric(P, 0)
    for x in M1.ball(3):
        for y in M2.ball(3):
            assert avg_conj_length(MP, (x, y)) == product_av(M1, M2, x, y)
    Z1 = make_abelian(1)
    MZ = WordMetric(Z1, 3)
    for x in MZ.ball(3):
        for y in MZ.ball(3):
            assert product_av(MZ, MZ, x, y) == Z1.closed_length(x) + Z1.closed_length(y)


def test_embeddings():
    Z = make_abelian(1)
    neg = embedding_check(Z, 4, "neg")
    pos = embedding_check(Z, 4, "pos")
    assert neg.passed and pos.passed
    assert neg.details["condition"] == 2 and pos.details["condition"] == -12
    assert neg.details["max_defect"] <= 1 and pos.details["max_defect"] <= 2
    with pytest.raises(ConditionNotMet):
        embedding_check(Z, 3, "neg")
    with pytest.raises(ConditionNotMet):
        embedding_check(Z, 3, "pos")


def test_negembed():
    rep = negembed_homomorphic_check(make_abelian(2), 3)
    assert rep.passed and rep.details["signs"]["-"] == rep.details["ball"] - 1
    with pytest.raises(ConditionNotMet):
        negembed_homomorphic_check(make_abelian(2), 2)
    H = make_free_product_free(make_abelian(1), 2)
    M = WordMetric(H, 4)
    assert kappa(M, H.parse_word("u1 u2^-1")) < 0
    assert kappa(M, H.parse_word("a u1")) < 0


def test_zhaszeroes():
    D = make_dihedral_inf()
    rep = zhaszeroes_check(WordMetric(D, 0), D.rotation(1), 4)
    assert rep.passed
    G = make_z2_rtimes_z6()
    with pytest.raises(NotNormal):
        zhaszeroes_check(WordMetric(G, 4), G.parse_word("a"), 2)
    P = make_product(make_free(2), make_abelian(1, ["z"]))
    assert zhaszeroes_check(WordMetric(P, 0), P.parse_word("z"), 5).passed
