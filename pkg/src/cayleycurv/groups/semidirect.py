"""Z^2 x| Z/6 presented as <a, b, t | [a,b], t^-1 a t = ab, t^-1 b t = a^-1, t^6>."""

from __future__ import annotations

from ..core import GroupOracle, ParseError, validate_genset

# t^-1 v t = PHI_INV v; PHI is its inverse, so (v, k)(w, m) = (v + PHI^k w, k + m)
PHI = ((0, 1), (-1, 1))


def _matmul(p, q):
    return tuple(tuple(sum(p[i][k] * q[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _powers(m, n=6):
    out = [((1, 0), (0, 1))]
    for _ in range(n - 1):
        out.append(_matmul(out[-1], m))
    return tuple(out)


PHI_POWERS = _powers(PHI)


class Z2RtimesZ6(GroupOracle):
    """Elements ``(x, y, k)`` mean the vector ``x a + y b`` followed by ``t^k``."""

    name = "Z2xZ6"
    has_closed_length = False

    def __init__(self):
        gens = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, 5))
        self.gens = gens
        self.genset = validate_genset(["a", "a^-1", "b", "b^-1", "t", "t^-1"], [1, 0, 3, 2, 5, 4], self, gens)

    def identity(self):
        return (0, 0, 0)

    def multiply(self, g, h):
        x, y, k = g
        u, v, m = h
        p = PHI_POWERS[k]
        return (x + p[0][0] * u + p[0][1] * v, y + p[1][0] * u + p[1][1] * v, (k + m) % 6)

    def inverse(self, g):
        x, y, k = g
        p = PHI_POWERS[(-k) % 6]
        return (-(p[0][0] * x + p[0][1] * y), -(p[1][0] * x + p[1][1] * y), (-k) % 6)

    def in_translation_subgroup(self, g) -> bool:
        return g[2] == 0

    def from_coords(self, coords):
        if len(coords) != 3:
            raise ParseError("semidirect coordinates are x,y,k")
        x, y, k = (int(c) for c in coords)
        return (x, y, k % 6)

    def format(self, g):
        return f"({g[0]},{g[1]};t^{g[2]})"


def make_z2_rtimes_z6() -> Z2RtimesZ6:
    return Z2RtimesZ6()
