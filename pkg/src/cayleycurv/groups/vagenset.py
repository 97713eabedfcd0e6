"""Generating sets for virtually abelian groups that flatten the abelian part.

Given a finite-index normal free abelian subgroup H with generators T and a
set U of lifts of the nontrivial quotient elements (closed under inversion),
the set S = U ∪ T' is built from

    V  = {uvw in H} ∪ {uv in H} ∪ T        over u, v, w in U
    T' = all conjugates of V by <U>

With respect to S, every element of H has zero curvature.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from ..core import GroupError, GroupOracle, NotGenerating
from ..metric import build_ball


class OrbitNotFinite(GroupError):
    pass


@dataclass
class VAGeneratingSet:
    U: list
    V: list
    T_prime: list
    elements: list
    group: GroupOracle

    @property
    def genset(self):
        return self.group.genset


def va_genset(
    group: GroupOracle,
    T: Sequence,
    U: Sequence,
    in_subgroup: Callable,
    max_orbit: int = 10_000,
    check_radius: int = 4,
) -> VAGeneratingSet:
    e = group.identity()
    U = list(dict.fromkeys(U))
    if any(group.inverse(u) not in U for u in U):
        raise ValueError("lift set U must be closed under inversion")
    mul = group.multiply
    V = []
    for u, v, w in product(U, repeat=3):
        x = mul(mul(u, v), w)
        if in_subgroup(x):
            V.append(x)
    for u, v in product(U, repeat=2):
        x = mul(u, v)
        if in_subgroup(x):
            V.append(x)
    V.extend(T)
    V = list(dict.fromkeys(V))

    # closure of V under conjugation by elements of U
    orbit = list(V)
    seen = set(orbit)
    frontier = list(orbit)
    while frontier:
        nxt = []
        for x in frontier:
            for u in U:
                y = group.conjugate(x, u)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_orbit:
                        raise OrbitNotFinite(f"<U>-orbit of V exceeds {max_orbit} elements")
        orbit.extend(nxt)
        frontier = nxt
    T_prime = [x for x in orbit if x != e]
    elements = list(dict.fromkeys([u for u in U if u != e] + T_prime))
    labels = [f"s{i}" for i in range(len(elements))]
    regen = group.with_generators(elements, labels)

    # every original generator must be reachable in the new Cayley graph
    ball = build_ball(regen, check_radius)
    missing = [group.format(s) for s in group.gens if s not in ball]
    if missing:
        raise NotGenerating(f"original generators {missing} not reached within radius {check_radius}")
    return VAGeneratingSet(U, V, T_prime, elements, regen)


def semidirect_flat_genset(group) -> VAGeneratingSet:
    """The construction for Z^2 x| Z/6 with H = <a, b>, T = {a, b}^±, U = {t, ..., t^5}."""
    T = [group.gens[i] for i in range(4)]
    t = group.gens[4]
    U = [group.power(t, k) for k in range(1, 6)]
    return va_genset(group, T, U, group.in_translation_subgroup)


def dihedral_flat_genset(group) -> VAGeneratingSet:
    """D_inf with H = <ab>, T = {ab, ba}, U = {a}."""
    T = [group.rotation(1), group.rotation(-1)]
    return va_genset(group, T, [group.gens[0]], lambda g: len(g) % 2 == 0)
