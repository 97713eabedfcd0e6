"""Discrete Heisenberg group in Mal'cev coordinates.

A triple ``(A, B, C)`` stands for ``a^A b^B c^C`` with ``c = [a, b] = a^-1 b^-1 a b``.
Multiplication goes through the unitriangular matrix
``[[1, x, z], [0, 1, y], [0, 0, 1]]`` with ``x = A, y = B, z = AB + C``.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from ..core import GroupError, GroupOracle, ParseError, validate_genset


class MalcevTriple(NamedTuple):
    A: int
    B: int
    C: int


class Unsupported(GroupError):
    """Closed-form length requested outside the region where it is known."""


def to_matrix(t) -> tuple[int, int, int]:
    A, B, C = t
    return A, B, A * B + C


def from_matrix(x: int, y: int, z: int) -> MalcevTriple:
    return MalcevTriple(x, y, z - x * y)


class HeisenbergGroup(GroupOracle):
    name = "H3"
    has_closed_length = False

    def __init__(self):
        gens = (MalcevTriple(1, 0, 0), MalcevTriple(-1, 0, 0), MalcevTriple(0, 1, 0), MalcevTriple(0, -1, 0))
        self.gens = gens
        self.genset = validate_genset(["a", "a^-1", "b", "b^-1"], [1, 0, 3, 2], self, gens)

    def identity(self):
        return MalcevTriple(0, 0, 0)

    def multiply(self, g, h):
        x1, y1, z1 = to_matrix(g)
        x2, y2, z2 = to_matrix(h)
        return from_matrix(x1 + x2, y1 + y2, z1 + z2 + x1 * y2)

    def inverse(self, g):
        A, B, C = g
        return MalcevTriple(-A, -B, -C - A * B)

    def apply_generator(self, g, i):
        A, B, C = g
        if i == 0:
            return MalcevTriple(A + 1, B, C - B)
        if i == 1:
            return MalcevTriple(A - 1, B, C + B)
        if i == 2:
            return MalcevTriple(A, B + 1, C)
        return MalcevTriple(A, B - 1, C)

    def conjugate_by_generator(self, g, i):
        A, B, C = g
        return MalcevTriple(A, B, C + (-B, B, A, -A)[i])

    def is_central(self, g):
        return g[0] == 0 and g[1] == 0

    def from_coords(self, coords):
        if len(coords) != 3:
            raise ParseError("Heisenberg coordinates are A,B,C")
        return MalcevTriple(*(int(c) for c in coords))

    def format(self, g):
        return f"({g[0]},{g[1]},{g[2]})"


def make_heisenberg() -> HeisenbergGroup:
    return HeisenbergGroup()


def ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def ceil_two_sqrt(m: int) -> int:
    """Exact ``ceil(2 * sqrt(m))`` for ``m >= 0``."""
    k = isqrt(4 * m)
    return k if k * k == 4 * m else k + 1


def star_low(A: int, B: int, C: int) -> int:
    return 2 * ceil_div(C, A) + A + B


def star_high(A: int, B: int, C: int) -> int:
    return 2 * ceil_two_sqrt(C + A * B) - A - B


def heisenberg_star_length(t) -> int:
    """Closed-form word length, valid only for ``A > B > 0`` and ``C > 0``."""
    A, B, C = t
    if not (A > B > 0 and C > 0):
        raise Unsupported(f"closed form needs A > B > 0 and C > 0, got {tuple(t)}")
    boundary = A * A - A * B
    if C < boundary:
        return star_low(A, B, C)
    if C > boundary:
        return star_high(A, B, C)
    low, high = star_low(A, B, C), star_high(A, B, C)
    if low != high:
        raise AssertionError(f"branches disagree at the boundary for {tuple(t)}: {low} != {high}")
    return low
