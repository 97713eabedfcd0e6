from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleycurv.curvature import UndefinedAtIdentity, kappa_r
from cayleycurv.groups import make_abelian, make_dihedral_inf, make_free
from cayleycurv.metric import WordMetric
from cayleycurv.transport import (
    SolverBudgetExceeded,
    brute_force_assignment,
    kappa_transport,
    min_cost_assignment,
    transport_distance,
    transport_instance,
)


def test_same_point():
    F = make_free(2)
    M = WordMetric(F, 4)
    a = F.parse_word("a")
    assert transport_distance(M, a, a) == 0


def test_z_shift_coupling():
    Z = make_abelian(1)
    M = WordMetric(Z, 1)
    for d in (2, 3, 5):
        g = Z.from_coords([d])
        inst = transport_instance(M, Z.identity(), g, 1)
        assert brute_force_assignment(inst.cost) == 3 * d
        assert transport_distance(M, Z.identity(), g) == d
        assert kappa_transport(M, g) == 0


def test_free_generator():
    F = make_free(2)
    M = WordMetric(F, 4)
    a = F.parse_word("a")
    assert kappa_transport(M, a) == Fraction(-4, 5) == kappa_r(M, a, 1, "ball")


def test_abelian_nonnegative_and_dominance():
    Z2 = make_abelian(2)
    M = WordMetric(Z2, 4)
    for g in M.ball(4)[1:]:
        assert kappa_transport(M, g) >= 0
    D = make_dihedral_inf()
    MD = WordMetric(D, 6)
    for g in MD.ball(4)[1:]:
        assert kappa_transport(MD, g) >= kappa_r(MD, g, 1, "ball")


def test_identity_and_budget():
    F = make_free(2)
    M = WordMetric(F, 6)
    with pytest.raises(UndefinedAtIdentity):
        kappa_transport(M, F.identity())
    with pytest.raises(SolverBudgetExceeded):
        transport_distance(M, F.identity(), F.parse_word("a"), r=3, budget=20)
    with pytest.raises(SolverBudgetExceeded):
        brute_force_assignment(np.zeros((10, 10), dtype=np.int64))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(0, 20), min_size=n * n, max_size=n * n)))
def test_solver_matches_enumeration(values):
    n = int(round(len(values) ** 0.5))
    cost = np.array(values, dtype=np.int64).reshape(n, n)
    assert min_cost_assignment(cost) == brute_force_assignment(cost)
