"""Right-angled Artin groups with standard generators V(Γ)^±.

Words are tuples of signed ints: ``v + 1`` is vertex ``v`` and ``-(v + 1)`` its
inverse. The canonical form of an element is its geodesic spelling (obtained
by deleting pairs ``x^-1 ... x`` whose middle commutes with ``x``) rearranged
to the lexicographically least word reachable by commuting swaps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from ..core import GroupOracle, ParseError, validate_genset
from .free import _names, pair_labels


@dataclass(frozen=True)
class RaagGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} outside 0..{self.n - 1}")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges) -> "RaagGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def from_file(cls, path, n: int | None = None) -> "RaagGraph":
        """Read ``u v`` edge lines (0-indexed); a lone integer declares an isolated vertex."""
        edges, top = [], -1
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise ParseError(f"{path}:{lineno}: expected integers") from None
            if len(nums) == 2:
                edges.append(tuple(nums))
            elif len(nums) != 1:
                raise ParseError(f"{path}:{lineno}: expected 'u v'")
            top = max(top, *nums)
        return cls.from_edges(n if n is not None else top + 1, edges)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def empty_graph(n: int) -> RaagGraph:
    return RaagGraph(n, frozenset())


def path_graph(n: int) -> RaagGraph:
    return RaagGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> RaagGraph:
    return RaagGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> RaagGraph:
    return RaagGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(n: int, seed: int, p: float = 0.5) -> RaagGraph:
    rng = random.Random(seed)
    return RaagGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def _letter_key(x: int):
    return (abs(x), x < 0)


class RAAG(GroupOracle):
    has_closed_length = True

    def __init__(self, graph: RaagGraph, names=None):
        if graph.n < 1:
            raise ValueError("RAAG needs at least one vertex")
        self.graph = graph
        self.names = _names(graph.n, names)
        adj = graph.adjacency()
        # commutes[u][v]: distinct adjacent vertices; a vertex blocks itself
        self._commutes = [[v in adj[u] for v in range(graph.n)] for u in range(graph.n)]
        self._universal = [len(adj[v]) == graph.n - 1 for v in range(graph.n)]
        labels, pairing = pair_labels(self.names)
        self.gens = tuple((s * (v + 1),) for v in range(graph.n) for s in (1, -1))
        self.genset = validate_genset(labels, pairing, self, self.gens)
        self.name = f"RAAG(n={graph.n}, edges={sorted(graph.edges)})"

    def _insert(self, word: list, x: int) -> None:
        vx = abs(x) - 1
        comm = self._commutes[vx]
        for j in range(len(word) - 1, -1, -1):
            y = word[j]
            if y == -x:
                del word[j]
                return
            if not comm[abs(y) - 1]:
                break
        word.append(x)

    def _canonical(self, word) -> tuple:
        rest = list(word)
        out = []
        commutes = self._commutes
        while rest:
            best = None
            seen = []
            for j, x in enumerate(rest):
                vx = abs(x) - 1
                if all(commutes[vx][u] for u in seen):
                    if best is None or _letter_key(x) < _letter_key(rest[best]):
                        best = j
                seen.append(vx)
            out.append(rest.pop(best))
        return tuple(out)

    def reduce(self, letters) -> tuple:
        word: list = []
        for x in letters:
            self._insert(word, x)
        return self._canonical(word)

    def identity(self):
        return ()

    def multiply(self, g, h):
        word = list(g)
        for x in h:
            self._insert(word, x)
        return self._canonical(word)

    def inverse(self, g):
        return self._canonical([-x for x in reversed(g)])

    def apply_generator(self, g, i):
        word = list(g)
        self._insert(word, self.gens[i][0])
        return self._canonical(word)

    def conjugate_length(self, g, i) -> int:
        x = self.gens[i][0]
        word = list(g)
        self._insert(word, x)
        word.reverse()
        word = [-y for y in word]
        self._insert(word, x)
        return len(word)

    def closed_length(self, g):
        return len(g)

    def prefixes(self, g) -> set[int]:
        """Letters that can start a geodesic spelling of g."""
        out, seen = set(), []
        for x in g:
            vx = abs(x) - 1
            if all(self._commutes[vx][u] for u in seen):
                out.add(x)
            seen.append(vx)
        return out

    def suffixes(self, g) -> set[int]:
        return {-x for x in self.prefixes(self.inverse(g))}

    def letter_index(self, x: int) -> int:
        return 2 * (abs(x) - 1) + (x < 0)

    def is_central(self, g):
        return all(self._universal[abs(x) - 1] for x in g)

    def from_coords(self, coords):
        return self.reduce(int(c) for c in coords)

    def format(self, g):
        if not g:
            return "e"
        return " ".join(self.names[abs(x) - 1] + ("^-1" if x < 0 else "") for x in g)


def make_raag(graph: RaagGraph, names=None) -> RAAG:
    return RAAG(graph, names)
