"""The infinite dihedral group <a, b | a^2, b^2>."""

from __future__ import annotations

from ..core import GroupOracle, validate_genset


class InfiniteDihedral(GroupOracle):
    """Elements are alternating words over {0: a, 1: b}, stored as tuples."""

    has_closed_length = True
    name = "Dinf"

    def __init__(self):
        self.gens = ((0,), (1,))
        self.genset = validate_genset(["a", "b"], [0, 1], self, self.gens)

    def identity(self):
        return ()

    def multiply(self, g, h):
        i = 0
        m = min(len(g), len(h))
        while i < m and g[-1 - i] == h[i]:
            i += 1
        return g[: len(g) - i] + h[i:]

    def inverse(self, g):
        return tuple(reversed(g))

    def apply_generator(self, g, i):
        if g and g[-1] == i:
            return g[:-1]
        return g + (i,)

    def closed_length(self, g):
        return len(g)

    def rotation(self, k: int):
        """``(ab)^k``; negative k gives powers of ``ba``."""
        if k >= 0:
            return (0, 1) * k
        return (1, 0) * (-k)

    def format(self, g):
        return "".join("ab"[x] for x in g) or "e"


def make_dihedral_inf() -> InfiniteDihedral:
    return InfiniteDihedral()
