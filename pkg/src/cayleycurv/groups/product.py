"""Direct products with the split generating set (S1 x {e}) ∪ ({e} x S2)."""

from __future__ import annotations

from ..core import GroupOracle, ParseError, validate_genset


class ProductGroup(GroupOracle):
    def __init__(self, left: GroupOracle, right: GroupOracle):
        self.left, self.right = left, right
        self.n_left = left.size
        e1, e2 = left.identity(), right.identity()
        self.gens = tuple((s, e2) for s in left.gens) + tuple((e1, s) for s in right.gens)
        l1, l2 = left.genset.labels, right.genset.labels
        if set(l1) & set(l2):
            l1 = tuple("1." + x for x in l1)
            l2 = tuple("2." + x for x in l2)
        pairing = list(left.genset.inverse_pairing) + [p + self.n_left for p in right.genset.inverse_pairing]
        self.genset = validate_genset(l1 + l2, pairing, self, self.gens)
        self.has_closed_length = left.has_closed_length and right.has_closed_length
        self.is_finite = left.is_finite and right.is_finite
        self.name = f"{left.name}x{right.name}"

    def identity(self):
        return (self.left.identity(), self.right.identity())

    def multiply(self, g, h):
        return (self.left.multiply(g[0], h[0]), self.right.multiply(g[1], h[1]))

    def inverse(self, g):
        return (self.left.inverse(g[0]), self.right.inverse(g[1]))

    def apply_generator(self, g, i):
        if i < self.n_left:
            return (self.left.apply_generator(g[0], i), g[1])
        return (g[0], self.right.apply_generator(g[1], i - self.n_left))

    def conjugate_by_generator(self, g, i):
        if i < self.n_left:
            return (self.left.conjugate_by_generator(g[0], i), g[1])
        return (g[0], self.right.conjugate_by_generator(g[1], i - self.n_left))

    def closed_length(self, g):
        if not self.has_closed_length:
            return None
        return self.left.closed_length(g[0]) + self.right.closed_length(g[1])

    def is_central(self, g):
        return self.left.is_central(g[0]) and self.right.is_central(g[1])

    def pair(self, x, y):
        return (x, y)

    def from_coords(self, coords):
        raise ParseError("product elements are entered as words")

    def format(self, g):
        return f"({self.left.format(g[0])}, {self.right.format(g[1])})"


def make_product(left: GroupOracle, right: GroupOracle) -> ProductGroup:
    return ProductGroup(left, right)
