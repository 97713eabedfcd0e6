"""Free groups with their standard generators; elements are reduced words."""

from __future__ import annotations

from ..core import GroupOracle, ParseError, validate_genset

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _names(n: int, names=None) -> list[str]:
    if names is not None:
        if len(names) != n:
            raise ValueError("need one name per free generator")
        return list(names)
    if n <= 8:
        return list(LETTERS[:n])
    return [f"x{i + 1}" for i in range(n)]


def pair_labels(names) -> tuple[list[str], list[int]]:
    labels, pairing = [], []
    for j, nm in enumerate(names):
        labels += [nm, nm + "^-1"]
        pairing += [2 * j + 1, 2 * j]
    return labels, pairing


class FreeGroup(GroupOracle):
    """F_n. A word is a tuple of nonzero ints: ``k`` is the k-th generator, ``-k`` its inverse."""

    has_closed_length = True

    def __init__(self, n: int, names=None):
        if n < 1:
            raise ValueError("free group rank must be >= 1")
        self.rank = n
        self.names = _names(n, names)
        labels, pairing = pair_labels(self.names)
        self.gens = tuple((s * (j + 1),) for j in range(n) for s in (1, -1))
        self.genset = validate_genset(labels, pairing, self, self.gens)
        self.name = f"F{n}"
        self._letters = [k for g in self.gens for k in g]

    def identity(self):
        return ()

    def multiply(self, g, h):
        i = 0
        m = min(len(g), len(h))
        while i < m and g[-1 - i] == -h[i]:
            i += 1
        return g[: len(g) - i] + h[i:]

    def inverse(self, g):
        return tuple(-k for k in reversed(g))

    def apply_generator(self, g, i):
        k = self._letters[i]
        if g and g[-1] == -k:
            return g[:-1]
        return g + (k,)

    def closed_length(self, g):
        return len(g)

    def is_cyclically_reduced(self, g) -> bool:
        return len(g) <= 1 or g[0] != -g[-1]

    def from_coords(self, coords):
        if any(c == 0 or abs(c) > self.rank for c in coords):
            raise ParseError("free-group coordinates are signed generator numbers 1..n")
        return self.evaluate(2 * (abs(c) - 1) + (c < 0) for c in coords)

    def format(self, g):
        if not g:
            return "e"
        return " ".join(self.names[abs(k) - 1] + ("^-1" if k < 0 else "") for k in g)


def make_free(n: int, names=None) -> FreeGroup:
    return FreeGroup(n, names)
