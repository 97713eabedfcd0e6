"""Free products G * F_n with generating set T ∪ U (T for G, U standard for F_n)."""

from __future__ import annotations

from ..core import GroupOracle, validate_genset
from .free import FreeGroup

G_TAG, F_TAG = 0, 1


class FreeProductWithFree(GroupOracle):
    """Elements are tuples of syllables ``(tag, payload)`` alternating between factors.

    G-syllables are nontrivial elements of G; F-syllables are nonempty reduced
    words of F_n. This alternating form is unique, and the word length is the
    sum of the syllable lengths.
    """

    def __init__(self, base: GroupOracle, n: int):
        if n < 1:
            raise ValueError("free rank must be >= 1")
        self.base = base
        self.free = FreeGroup(n, [f"u{i + 1}" for i in range(n)])
        self.n_base = base.size
        self.gens = tuple(((G_TAG, s),) for s in base.gens) + tuple(((F_TAG, s),) for s in self.free.gens)
        labels = base.genset.labels + self.free.genset.labels
        pairing = list(base.genset.inverse_pairing) + [p + self.n_base for p in self.free.genset.inverse_pairing]
        self.genset = validate_genset(labels, pairing, self, self.gens)
        self.has_closed_length = base.has_closed_length
        self.name = f"{base.name}*F{n}"

    def _factor(self, tag):
        return self.base if tag == G_TAG else self.free

    def identity(self):
        return ()

    def multiply(self, g, h):
        left = list(g)
        i = 0
        while left and i < len(h) and left[-1][0] == h[i][0]:
            tag = h[i][0]
            factor = self._factor(tag)
            merged = factor.multiply(left[-1][1], h[i][1])
            left.pop()
            i += 1
            if merged != factor.identity():
                left.append((tag, merged))
                break
        return tuple(left) + tuple(h[i:])

    def inverse(self, g):
        return tuple((tag, self._factor(tag).inverse(x)) for tag, x in reversed(g))

    def apply_generator(self, g, i):
        if i < self.n_base:
            tag, factor, j = G_TAG, self.base, i
        else:
            tag, factor, j = F_TAG, self.free, i - self.n_base
        if g and g[-1][0] == tag:
            merged = factor.apply_generator(g[-1][1], j)
            if merged == factor.identity():
                return g[:-1]
            return g[:-1] + ((tag, merged),)
        return g + ((tag, factor.gens[j]),)

    def closed_length(self, g):
        if not self.has_closed_length:
            return None
        return sum(self._factor(tag).closed_length(x) for tag, x in g)

    def embed(self, x):
        """The inclusion G -> G * F_n."""
        return () if x == self.base.identity() else ((G_TAG, x),)

    def embed_free(self, w):
        return () if not w else ((F_TAG, w),)

    def format(self, g):
        if not g:
            return "e"
        return " . ".join(self._factor(tag).format(x) for tag, x in g)


def make_free_product_free(base: GroupOracle, n: int) -> FreeProductWithFree:
    return FreeProductWithFree(base, n)
