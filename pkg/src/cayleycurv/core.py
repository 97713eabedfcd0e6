"""Abstract group-with-generators interface shared by every concrete group."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

Element = Hashable


class GroupError(Exception):
    """Base class for errors raised by this package."""


class GeneratorSetError(GroupError, ValueError):
    pass


class EmptyGeneratorSet(GeneratorSetError):
    pass


class NotInvolution(GeneratorSetError):
    pass


class ContainsIdentity(GeneratorSetError):
    pass


class InverseMismatch(GeneratorSetError):
    """The paired label is not the group inverse of its partner."""


class NotGenerating(GroupError):
    pass


class AxiomViolation(GroupError):
    def __init__(self, law: str, witness: tuple):
        super().__init__(f"{law} fails on {witness!r}")
        self.law = law
        self.witness = witness


class ParseError(GroupError, ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    labels: tuple[str, ...]
    inverse_pairing: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def inverse_index(self, i: int) -> int:
        return self.inverse_pairing[i]


def validate_genset(
    labels: Sequence[str],
    pairing: Sequence[int],
    group: "GroupOracle | None" = None,
    elements: Sequence[Element] | None = None,
) -> GeneratorSet:
    """Check the standing assumptions on a generating set and build it.

    ``pairing[i]`` is the index of the inverse of generator ``i``. When a
    group and the generator elements are supplied, the pairing is checked
    against the actual group law and identity membership is rejected.
    """
    labels = tuple(labels)
    pairing = tuple(int(p) for p in pairing)
    if not labels:
        raise EmptyGeneratorSet("generating set must be nonempty")
    if len(pairing) != len(labels):
        raise NotInvolution("pairing length differs from label count")
    if len(set(labels)) != len(labels):
        raise GeneratorSetError("duplicate generator labels")
    for i, p in enumerate(pairing):
        if not 0 <= p < len(labels) or pairing[p] != i:
            raise NotInvolution(f"pairing is not an involution at index {i}")
    if group is not None and elements is not None:
        e = group.identity()
        for i, g in enumerate(elements):
            if g == e:
                raise ContainsIdentity(f"generator {labels[i]!r} is the identity")
        for i, p in enumerate(pairing):
            if group.multiply(elements[i], elements[p]) != e:
                raise InverseMismatch(
                    f"{labels[p]!r} is not the inverse of {labels[i]!r}"
                )
    return GeneratorSet(labels, pairing)


_TOKEN_RE = re.compile(r"\^(-?\d+)")


class GroupOracle:
    """A group together with an indexed symmetric generating set.

    Subclasses set ``self.genset`` and ``self.gens`` (the generator elements,
    in label order) and implement :meth:`identity`, :meth:`multiply` and
    :meth:`inverse`. Elements are immutable hashable canonical forms, so
    equality of elements is equality in the group and the element itself
    serves as its canonical key.
    """

    name = "group"
    genset: GeneratorSet
    gens: tuple
    has_closed_length = False
    #: True when ``closed_length`` is an internal full-BFS lookup (finite groups)
    is_finite = False

    def identity(self) -> Element:
        raise NotImplementedError

    def multiply(self, g: Element, h: Element) -> Element:
        raise NotImplementedError

    def inverse(self, g: Element) -> Element:
        raise NotImplementedError

    def generator(self, i: int) -> Element:
        return self.gens[i]

    def apply_generator(self, g: Element, i: int) -> Element:
        """Right multiplication ``g * s_i``."""
        return self.multiply(g, self.gens[i])

    def conjugate_by_generator(self, g: Element, i: int) -> Element:
        """``s_i^-1 g s_i``."""
        return self.multiply(self.gens[self.genset.inverse_pairing[i]], self.apply_generator(g, i))

    def conjugate(self, g: Element, u: Element) -> Element:
        """``u^-1 g u``."""
        return self.multiply(self.inverse(u), self.multiply(g, u))

    def canonical_key(self, g: Element) -> Element:
        return g

    def closed_length(self, g: Element) -> int | None:
        return None

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inverse(g), -k
        out = self.identity()
        for _ in range(k):
            out = self.multiply(out, g)
        return out

    def is_central(self, g: Element) -> bool:
        return all(self.apply_generator(g, i) == self.multiply(s, g) for i, s in enumerate(self.gens))

    @property
    def size(self) -> int:
        return self.genset.size

    # word input / output

    def _base_names(self) -> dict[str, int]:
        names = getattr(self, "_names_cache", None)
        if names is None:
            names = {lab: i for i, lab in enumerate(self.genset.labels) if not lab.endswith("^-1")}
            self._names_cache = names
        return names

    def word_indices(self, text: str) -> list[int]:
        """Parse a word such as ``"a b a^-1"``, ``"ab"`` or ``"a^3 b^-2"``."""
        names = self._base_names()
        ordered = sorted(names, key=len, reverse=True)
        out: list[int] = []
        for token in text.split():
            pos = 0
            while pos < len(token):
                for name in ordered:
                    if token.startswith(name, pos):
                        break
                else:
                    raise ParseError(f"cannot parse {token[pos:]!r} in {text!r}")
                idx = names[name]
                pos += len(name)
                m = _TOKEN_RE.match(token, pos)
                k = 1
                if m:
                    k = int(m.group(1))
                    pos = m.end()
                if k < 0:
                    idx, k = self.genset.inverse_pairing[idx], -k
                out.extend([idx] * k)
        return out

    def evaluate(self, indices: Iterable[int]) -> Element:
        g = self.identity()
        for i in indices:
            g = self.apply_generator(g, i)
        return g

    def parse_word(self, text: str) -> Element:
        return self.evaluate(self.word_indices(text))

    def from_coords(self, coords: Sequence[int]) -> Element:
        raise ParseError(f"{self.name} has no coordinate input")

    def format(self, g: Element) -> str:
        return repr(g)

    def with_generators(self, elements: Sequence[Element], labels: Sequence[str] | None = None) -> "GroupOracle":
        return Regenerated(self, elements, labels)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} |S|={self.size}>"


def pairing_for(group: GroupOracle, elements: Sequence[Element]) -> list[int]:
    index = {g: i for i, g in enumerate(elements)}
    pairing = []
    for g in elements:
        inv = group.inverse(g)
        if inv not in index:
            raise InverseMismatch(f"generating set not closed under inversion at {group.format(g)}")
        pairing.append(index[inv])
    return pairing


class Regenerated(GroupOracle):
    """The same group as ``base`` with a different generating set."""

    has_closed_length = False

    def __init__(self, base: GroupOracle, elements: Sequence[Element], labels: Sequence[str] | None = None):
        self.base = base
        elements = tuple(elements)
        if labels is None:
            labels = [f"g{i}" for i in range(len(elements))]
        self.genset = validate_genset(labels, pairing_for(base, elements), base, elements)
        self.gens = elements
        self.name = f"{base.name}[regen {len(elements)}]"

    def identity(self):
        return self.base.identity()

    def multiply(self, g, h):
        return self.base.multiply(g, h)

    def inverse(self, g):
        return self.base.inverse(g)

    def from_coords(self, coords):
        return self.base.from_coords(coords)

    def format(self, g):
        return self.base.format(g)


@dataclass
class ProbeReport:
    group: str
    trials: int
    seed: int
    passed: bool = True
    checks: dict[str, int] = field(default_factory=dict)


def random_element(group: GroupOracle, rng: random.Random, max_len: int = 8) -> Element:
    return group.evaluate(rng.randrange(group.size) for _ in range(rng.randint(0, max_len)))


def group_axiom_probe(group: GroupOracle, trials: int = 1000, seed: int = 0, max_len: int = 8) -> ProbeReport:
    """Spot-test the group laws on random words; raises AxiomViolation."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    e = group.identity()
    report = ProbeReport(group.name, trials, seed)
    counts = dict.fromkeys(["associativity", "identity", "inverse", "canonical", "generator"], 0)
    for _ in range(trials):
        g, h, k = (random_element(group, rng, max_len) for _ in range(3))
        if group.multiply(group.multiply(g, h), k) != group.multiply(g, group.multiply(h, k)):
            raise AxiomViolation("associativity", (g, h, k))
        counts["associativity"] += 1
        if group.multiply(g, e) != g or group.multiply(e, g) != g:
            raise AxiomViolation("identity", (g,))
        counts["identity"] += 1
        gi = group.inverse(g)
        if group.canonical_key(group.multiply(g, gi)) != group.canonical_key(e) or group.multiply(gi, g) != e:
            raise AxiomViolation("inverse", (g, gi))
        counts["inverse"] += 1
        # two spellings of the same element must give the same key
        if group.canonical_key(group.multiply(group.multiply(g, h), group.inverse(h))) != group.canonical_key(g):
            raise AxiomViolation("canonical", (g, h))
        counts["canonical"] += 1
        i = rng.randrange(group.size)
        if group.apply_generator(g, i) != group.multiply(g, group.generator(i)):
            raise AxiomViolation("generator", (g, i))
        counts["generator"] += 1
    report.checks = counts
    return report


def check_pairing(group: GroupOracle) -> None:
    e = group.identity()
    for i, p in enumerate(group.genset.inverse_pairing):
        if group.multiply(group.gens[i], group.gens[p]) != e:
            raise InverseMismatch(f"pairing wrong at {group.genset.labels[i]}")


def describe(group: GroupOracle) -> dict[str, Any]:
    return {"name": group.name, "generators": list(group.genset.labels), "closed_length": group.has_closed_length}
