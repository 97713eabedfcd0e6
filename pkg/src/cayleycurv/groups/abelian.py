"""Free abelian groups Z^n with the standard generators {±e_i}."""

from __future__ import annotations

from ..core import GroupOracle, ParseError, validate_genset
from .free import _names, pair_labels


class AbelianGroup(GroupOracle):
    has_closed_length = True

    def __init__(self, n: int, names=None):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.rank = n
        self.names = _names(n, names)
        labels, pairing = pair_labels(self.names)
        gens = []
        for j in range(n):
            for s in (1, -1):
                v = [0] * n
                v[j] = s
                gens.append(tuple(v))
        self.gens = tuple(gens)
        self.genset = validate_genset(labels, pairing, self, self.gens)
        self.name = f"Z{n}" if n > 1 else "Z"

    def identity(self):
        return (0,) * self.rank

    def multiply(self, g, h):
        return tuple(x + y for x, y in zip(g, h))

    def inverse(self, g):
        return tuple(-x for x in g)

    def conjugate_by_generator(self, g, i):
        return g

    def is_central(self, g):
        return True

    def closed_length(self, g):
        return sum(abs(x) for x in g)

    def from_coords(self, coords):
        if len(coords) != self.rank:
            raise ParseError(f"expected {self.rank} coordinates")
        return tuple(int(c) for c in coords)

    def format(self, g):
        return "(" + ",".join(map(str, g)) + ")"


def make_abelian(n: int, names=None) -> AbelianGroup:
    return AbelianGroup(n, names)
