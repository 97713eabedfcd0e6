"""Comparison curvature: conjugation averages, κ, and the radius-r sphere/ball variants.

All values are exact :class:`fractions.Fraction` instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Element, GroupError
from .metric import WordMetric


class UndefinedAtIdentity(GroupError, ValueError):
    pass


class IdentityViolation(GroupError, AssertionError):
    pass


def sign(q) -> str:
    return "+" if q > 0 else "-" if q < 0 else "0"


def fmt(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class CurvatureReport:
    element: str
    length: int
    av: Fraction
    kappa: Fraction
    sign: str
    variant: str = "sphere"

    def as_row(self) -> dict:
        return {
            "element": self.element,
            "length": self.length,
            "av": fmt(self.av),
            "kappa": fmt(self.kappa),
            "kappa_approx": f"{float(self.kappa):.6f}",
            "sign": self.sign,
            "variant": self.variant,
        }


def avg_conj_length(metric: WordMetric, g: Element) -> Fraction:
    """Mean of ``|s^-1 g s|`` over the generators."""
    n = metric.length(g)
    metric.require(n + 2, "conjugates can be 2 longer")
    total = sum(metric.conjugate_lengths(g))
    return Fraction(total, metric.group.size)


def _nonidentity_length(metric: WordMetric, g: Element) -> int:
    n = metric.length(g)
    if n == 0:
        raise UndefinedAtIdentity("curvature is undefined at the identity")
    return n


def kappa(metric: WordMetric, g: Element) -> Fraction:
    n = _nonidentity_length(metric, g)
    return (n - avg_conj_length(metric, g)) / n


def curvature_report(metric: WordMetric, g: Element) -> CurvatureReport:
    n = _nonidentity_length(metric, g)
    av = avg_conj_length(metric, g)
    k = (n - av) / n
    return CurvatureReport(metric.group.format(g), n, av, k, sign(k))


def _shifted_distances(metric: WordMetric, x: Element, y: Element, points: Iterable[Element]) -> list[int]:
    # d(xw, yw) = |w^-1 (x^-1 y) w|
    group = metric.group
    g = group.multiply(group.inverse(x), y)
    return [metric.length(group.conjugate(g, w)) for w in points]


def spherical_comparison(metric: WordMetric, x: Element, y: Element, r: int) -> Fraction:
    """Average of ``d(xw, yw)`` over the sphere of radius r."""
    d = metric.distance(x, y)
    metric.require(d + 2 * r)
    sphere = metric.sphere(r)
    if not sphere:
        raise UndefinedAtIdentity(f"the sphere of radius {r} is empty")
    return Fraction(sum(_shifted_distances(metric, x, y, sphere)), len(sphere))


def ball_comparison(metric: WordMetric, x: Element, y: Element, r: int, include_center: bool = True) -> Fraction:
    """Average of ``d(xw, yw)`` over the ball of radius r.

    ``include_center=False`` drops ``w = e`` from the ball, which for r = 1 is
    the spherical average.
    """
    d = metric.distance(x, y)
    metric.require(d + 2 * r)
    ball = metric.ball(r)
    if not include_center:
        ball = ball[1:]
    return Fraction(sum(_shifted_distances(metric, x, y, ball)), len(ball))


def kappa_r(metric: WordMetric, g: Element, r: int = 1, mode: str = "sphere") -> Fraction:
    n = _nonidentity_length(metric, g)
    e = metric.group.identity()
    if mode == "sphere":
        avg = spherical_comparison(metric, e, g, r)
    elif mode == "ball":
        avg = ball_comparison(metric, e, g, r)
    else:
        raise ValueError(f"mode must be 'sphere' or 'ball', not {mode!r}")
    return (n - avg) / n


def ball_from_sphere(d: int, sphere_avg: Fraction, n_gens: int) -> Fraction:
    """Radius-1 ball average as the weighted mean of the center distance and the sphere average."""
    return (d + n_gens * Fraction(sphere_avg)) / (n_gens + 1)


@dataclass(frozen=True)
class LaplacianReport:
    element: str
    f_at_x: int
    neighbor_values: tuple
    laplacian: Fraction
    kappa: Fraction
    holds: bool


def graph_laplacian_check(metric: WordMetric, x: Element) -> LaplacianReport:
    """Check ``κ(x) f_x(x) = f_x(x) - mean_{y~x} f_x(y)`` for ``f_x(y) = |y^-1 x y|``."""
    group = metric.group
    n = _nonidentity_length(metric, x)
    metric.require(n + 2)
    f_x = metric.length(group.conjugate(x, x))
    values = []
    for i in range(group.size):
        y = group.apply_generator(x, i)
        values.append(metric.length(group.conjugate(x, y)))
    lap = f_x - Fraction(sum(values), len(values))
    k = kappa(metric, x)
    holds = k * f_x == lap
    if not holds:
        raise IdentityViolation(f"Laplacian identity fails at {group.format(x)}: {k}*{f_x} != {lap}")
    return LaplacianReport(group.format(x), f_x, tuple(values), lap, k, holds)


def automorphic_graph_neighbors(group, automorphisms: Sequence[Element], g: Element) -> list:
    """Neighbors of g in the automorphic Cayley graph for the inner automorphisms ``x -> u^-1 x u``."""
    return [group.conjugate(g, u) for u in automorphisms]
