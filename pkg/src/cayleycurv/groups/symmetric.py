"""Symmetric groups with the generating sets used to steer the sign of curvature."""

from __future__ import annotations

from itertools import permutations
from math import factorial

from ..core import GroupOracle, NotGenerating, ParseError, pairing_for, validate_genset

MAX_DEGREE = 8


def compose(g, h):
    """``(g h)(i) = g(h(i))``: apply h first."""
    return tuple(g[i] for i in h)


def perm_inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def long_cycle(n: int):
    """The n-cycle ``(1 2 ... n)`` in 0-based one-line notation."""
    return tuple((i + 1) % n for i in range(n))


def adjacent_transposition(n: int, i: int):
    """``(i, i+1)`` for 1 <= i < n, 1-based."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def one_line(g) -> str:
    return "p" + "".join(map(str, g))


class SymmetricGroup(GroupOracle):
    """Symm(n) acting on {0..n-1}; lengths come from a BFS over the whole group."""

    has_closed_length = True
    is_finite = True

    def __init__(self, n: int, mode: str = "neg", custom=None):
        if not 3 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be in 3..{MAX_DEGREE}")
        self.n = n
        self.mode = mode
        self.sigma = long_cycle(n)
        sigma_inv = perm_inverse(self.sigma)
        e = tuple(range(n))
        if mode == "pos":
            if n < 4:
                raise ValueError("S_pos needs n >= 4")
            drop = {e, self.sigma, sigma_inv}
            elements = [p for p in permutations(range(n)) if p not in drop]
            labels = [one_line(p) for p in elements]
        elif mode == "neg":
            elements = [adjacent_transposition(n, i) for i in range(1, n)] + [self.sigma, sigma_inv]
            labels = [f"s{i}" for i in range(1, n)] + ["sigma", "sigma^-1"]
        elif mode == "standard":
            elements = [adjacent_transposition(n, i) for i in range(1, n)]
            labels = [f"s{i}" for i in range(1, n)]
        elif mode == "all":
            elements = [p for p in permutations(range(n)) if p != e]
            labels = [one_line(p) for p in elements]
        elif mode == "custom":
            if not custom:
                raise ValueError("custom mode needs a list of permutations")
            seen = []
            for p in custom:
                p = tuple(int(x) for x in p)
                if sorted(p) != list(range(n)):
                    raise ParseError(f"{p} is not a permutation of 0..{n - 1}")
                for q in (p, perm_inverse(p)):
                    if q != e and q not in seen:
                        seen.append(q)
            elements = seen
            labels = [one_line(p) for p in elements]
        else:
            raise ValueError(f"unknown generating-set mode {mode!r}")
        self.gens = tuple(elements)
        self.genset = validate_genset(labels, pairing_for(self, self.gens), self, self.gens)
        self.name = f"Sym{n}-{mode}"
        self._lengths = self._bfs()
        if len(self._lengths) != factorial(n):
            raise NotGenerating(f"generators reach {len(self._lengths)} of {factorial(n)} permutations")

    def _bfs(self) -> dict:
        e = self.identity()
        lengths = {e: 0}
        frontier = [e]
        r = 0
        while frontier:
            r += 1
            nxt = []
            for g in frontier:
                for s in self.gens:
                    h = compose(g, s)
                    if h not in lengths:
                        lengths[h] = r
                        nxt.append(h)
            frontier = nxt
        return lengths

    def identity(self):
        return tuple(range(self.n))

    def multiply(self, g, h):
        return compose(g, h)

    def inverse(self, g):
        return perm_inverse(g)

    def closed_length(self, g):
        return self._lengths[g]

    def elements(self):
        return list(self._lengths)

    def from_coords(self, coords):
        p = tuple(int(c) for c in coords)
        if sorted(p) != list(range(self.n)):
            raise ParseError(f"{p} is not a permutation of 0..{self.n - 1}")
        return p

    def format(self, g):
        return "[" + " ".join(map(str, g)) + "]"


def make_symmetric(n: int, genset_mode: str = "neg", custom=None) -> SymmetricGroup:
    return SymmetricGroup(n, genset_mode, custom)
