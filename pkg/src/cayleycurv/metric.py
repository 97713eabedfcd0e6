"""Word metric: BFS ball tables keyed by canonical form, plus closed-form dispatch."""

from __future__ import annotations

import ast
import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .core import Element, GroupError, GroupOracle

DEFAULT_MEMORY_BUDGET = 10**7
CACHE_ENV = "CAYLEYCURV_CACHE_DIR"
_CACHE_MAGIC = "cayleycurv-balltable v1"


class OutOfTable(GroupError, LookupError):
    pass


class MemoryBudgetExceeded(GroupError, MemoryError):
    def __init__(self, completed_radius: int, budget: int):
        super().__init__(f"ball exceeds {budget} elements beyond radius {completed_radius}")
        self.completed_radius = completed_radius
        self.budget = budget


class LengthMismatch(GroupError, AssertionError):
    pass


@dataclass
class BallTable:
    radius: int
    lengths: dict = field(repr=False)
    shells: list = field(repr=False)

    @property
    def shell_sizes(self) -> list[int]:
        return [len(s) for s in self.shells]

    def __len__(self) -> int:
        return len(self.lengths)

    def __contains__(self, g) -> bool:
        return g in self.lengths

    def get(self, g):
        return self.lengths.get(g)

    def sphere(self, r: int) -> list:
        if r > self.radius:
            raise OutOfTable(f"sphere {r} beyond table radius {self.radius}")
        return self.shells[r]

    def ball(self, r: int) -> list:
        if r > self.radius:
            raise OutOfTable(f"ball {r} beyond table radius {self.radius}")
        return [g for shell in self.shells[: r + 1] for g in shell]

    def ball_size(self, r: int) -> int:
        return sum(len(s) for s in self.shells[: r + 1])


def build_ball(group: GroupOracle, radius: int, max_elements: int = DEFAULT_MEMORY_BUDGET) -> BallTable:
    """Exact BFS from the identity out to ``radius``; shells sorted by key."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    e = group.identity()
    key = group.canonical_key
    lengths = {key(e): 0}
    shells = [[e]]
    frontier = [e]
    apply = group.apply_generator
    ngens = group.size
    for r in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for i in range(ngens):
                h = apply(g, i)
                k = key(h)
                if k not in lengths:
                    lengths[k] = r
                    nxt.append(h)
            if len(lengths) > max_elements:
                raise MemoryBudgetExceeded(r - 1, max_elements)
        nxt.sort(key=key)
        shells.append(nxt)
        frontier = nxt
    return BallTable(radius, lengths, shells)


def descriptor_hash(descriptor) -> str:
    blob = json.dumps(descriptor, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def save_table(table: BallTable, path, tag: str = "") -> None:
    lines = [f"{_CACHE_MAGIC} {tag} {table.radius}"]
    for r, shell in enumerate(table.shells):
        lines.extend(f"{_plain(g)!r}\t{r}" for g in shell)
    Path(path).write_text("\n".join(lines) + "\n")


def _plain(x):
    # namedtuples compare and hash like plain tuples, so the cache stores plain ones
    if isinstance(x, tuple):
        return tuple(_plain(y) for y in x)
    return x


def load_table(path, group: GroupOracle | None = None) -> BallTable:
    text = Path(path).read_text().splitlines()
    header = text[0].split()
    if " ".join(header[:2]) != _CACHE_MAGIC:
        raise ValueError(f"{path} is not a ball-table cache")
    radius = int(header[-1])
    shells: list[list] = [[] for _ in range(radius + 1)]
    lengths = {}
    rebuild = type(group.identity()) if group is not None else None
    for line in text[1:]:
        rep, r = line.rsplit("\t", 1)
        g = ast.literal_eval(rep)
        if rebuild is not None and hasattr(rebuild, "_fields"):
            g = rebuild(*g)
        shells[int(r)].append(g)
        lengths[g] = int(r)
    return BallTable(radius, lengths, shells)


def cached_build(group: GroupOracle, radius: int, descriptor=None, max_elements: int = DEFAULT_MEMORY_BUDGET,
                 cache_dir=None) -> BallTable:
    """Build a ball, reusing an on-disk copy when a cache directory is configured."""
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if not cache_dir or descriptor is None:
        return build_ball(group, radius, max_elements)
    tag = descriptor_hash(descriptor)
    path = Path(cache_dir) / f"{tag}-R{radius}.ball"
    if path.exists():
        return load_table(path, group)
    table = build_ball(group, radius, max_elements)
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    save_table(table, path, tag)
    return table


class WordMetric:
    """A group plus a BFS table of fixed radius; answers lengths and distances.

    Groups with a closed-form length answer every element; other groups answer
    only elements inside the table and raise :class:`OutOfTable` otherwise.
    """

    def __init__(self, group: GroupOracle, radius: int = 0, table: BallTable | None = None,
                 max_elements: int = DEFAULT_MEMORY_BUDGET):
        self.group = group
        self.table = table if table is not None else build_ball(group, radius, max_elements)
        self.radius = self.table.radius
        self._closed = group.closed_length if group.has_closed_length else None
        self._lengths = self.table.lengths

    def length(self, g: Element) -> int:
        if self._closed is not None:
            return self._closed(g)
        n = self._lengths.get(g)
        if n is None:
            raise OutOfTable(f"{self.group.format(g)} lies outside the radius-{self.radius} ball")
        return n

    def distance(self, x: Element, y: Element) -> int:
        return self.length(self.group.multiply(self.group.inverse(x), y))

    def covers_lengths(self, radius: int) -> bool:
        return self._closed is not None or radius <= self.radius

    def require(self, radius: int, why: str = "") -> None:
        """Raise unless every element of length <= radius has a known length."""
        if not self.covers_lengths(radius):
            msg = f"need lengths up to {radius} but table radius is {self.radius}"
            raise OutOfTable(msg + (f" ({why})" if why else ""))

    def sphere(self, r: int) -> list:
        return self.table.sphere(r)

    def ball(self, r: int) -> list:
        return self.table.ball(r)

    def conjugate_lengths(self, g: Element) -> list[int]:
        fast = getattr(self.group, "conjugate_length", None)
        if fast is not None and self._closed is not None:
            return [fast(g, i) for i in range(self.group.size)]
        conj = self.group.conjugate_by_generator
        return [self.length(conj(g, i)) for i in range(self.group.size)]


def word_length(metric: WordMetric, g: Element) -> int:
    """Exact length; when both the closed form and the table know g they must agree."""
    group = metric.group
    closed = group.closed_length(g) if group.has_closed_length else None
    tabled = metric.table.get(g)
    if closed is not None and tabled is not None and closed != tabled:
        raise LengthMismatch(f"closed form {closed} != BFS {tabled} at {group.format(g)}")
    if closed is not None:
        return closed
    if tabled is None:
        raise OutOfTable(f"{group.format(g)} lies outside the radius-{metric.radius} ball")
    return tabled


def distance(metric: WordMetric, x: Element, y: Element) -> int:
    return word_length(metric, metric.group.multiply(metric.group.inverse(x), y))
