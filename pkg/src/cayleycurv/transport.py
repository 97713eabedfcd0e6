"""Transportation (earth mover's) curvature between uniform ball measures.

Both measures are uniform on sets of equal size, so an optimal plan can be
taken to be a permutation and the L1 Wasserstein distance is a min-cost
assignment divided by the ball size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Element, GroupError
from .curvature import UndefinedAtIdentity
from .metric import WordMetric

DEFAULT_SOLVER_BUDGET = 3000


class SolverBudgetExceeded(GroupError):
    pass


@dataclass
class TransportInstance:
    source: list
    target: list
    cost: np.ndarray

    @property
    def size(self) -> int:
        return len(self.source)


def transport_instance(metric: WordMetric, x: Element, y: Element, r: int) -> TransportInstance:
    group = metric.group
    d = metric.distance(x, y)
    metric.require(d + 2 * r, "transport costs reach d + 2r")
    ball = metric.ball(r)
    g = group.multiply(group.inverse(x), y)
    inv = [group.inverse(w) for w in ball]
    cost = np.empty((len(ball), len(ball)), dtype=np.int64)
    for i, wi in enumerate(inv):
        left = group.multiply(wi, g)
        for j, wj in enumerate(ball):
            cost[i, j] = metric.length(group.multiply(left, wj))
    source = [group.multiply(x, w) for w in ball]
    target = [group.multiply(y, w) for w in ball]
    return TransportInstance(source, target, cost)


def min_cost_assignment(cost: np.ndarray) -> int:
    rows, cols = linear_sum_assignment(cost)
    return int(cost[rows, cols].sum())


_PERMS: dict[int, np.ndarray] = {}


def brute_force_assignment(cost: np.ndarray) -> int:
    """Exhaustive minimum over all n! permutations; only for tiny instances."""
    n = len(cost)
    if n > 9:
        raise SolverBudgetExceeded("enumeration is limited to 9 points")
    perms = _PERMS.get(n)
    if perms is None:
        perms = _PERMS[n] = np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)
    totals = np.asarray(cost)[np.arange(n), perms].sum(axis=1)
    return int(totals.min())


def transport_distance(metric: WordMetric, x: Element, y: Element, r: int = 1,
                       budget: int = DEFAULT_SOLVER_BUDGET) -> Fraction:
    if metric.distance(x, y) == 0:
        return Fraction(0)
    size = metric.table.ball_size(r) if r <= metric.radius else None
    if size is not None and size > budget:
        raise SolverBudgetExceeded(f"|B_{r}| = {size} exceeds solver budget {budget}")
    inst = transport_instance(metric, x, y, r)
    return Fraction(min_cost_assignment(inst.cost), inst.size)


def kappa_transport(metric: WordMetric, g: Element, r: int = 1) -> Fraction:
    d = metric.length(g)
    if d == 0:
        raise UndefinedAtIdentity("curvature is undefined at the identity")
    return (d - transport_distance(metric, metric.group.identity(), g, r)) / d
