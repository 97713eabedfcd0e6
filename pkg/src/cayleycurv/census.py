"""Ball-level statistics and mechanical checks of the known curvature results."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial

from .core import Element, GroupError, GroupOracle
from .curvature import avg_conj_length, kappa, sign
from .groups import make_free_product_free, make_product, make_symmetric
from .metric import WordMetric


class PredictionMismatch(GroupError, AssertionError):
    pass


class OutsideRegion(GroupError, ValueError):
    pass


class SignViolation(GroupError, AssertionError):
    pass


class ConditionNotMet(GroupError, ValueError):
    pass


class NotNormal(GroupError, ValueError):
    pass


class IdentityViolation(GroupError, AssertionError):
    pass


@dataclass
class VerificationReport:
    check: str
    status: str = "pass"
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, witness) -> None:
        self.status = "fail"
        self.witnesses.append(witness)

    def to_json(self) -> dict:
        return {"check": self.check, "status": self.status, "witnesses": [str(w) for w in self.witnesses[:20]],
                "details": {k: _jsonable(v) for k, v in self.details.items()}}


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def kappa_table(metric: WordMetric, n: int) -> dict:
    """κ for every non-identity element of the radius-n ball."""
    metric.require(n + 2, "census needs conjugate lengths")
    out = {}
    size = metric.group.size
    for r in range(1, n + 1):
        for g in metric.sphere(r):
            out[g] = Fraction(r * size - sum(metric.conjugate_lengths(g)), r * size)
    return out


@dataclass
class SignCensus:
    radius: int
    positive: int
    zero: int
    negative: int
    ball_size: int
    identity_convention: str = "e excluded from counts"

    @property
    def proportions(self) -> tuple[Fraction, Fraction, Fraction]:
        b = self.ball_size
        return Fraction(self.positive, b), Fraction(self.zero, b), Fraction(self.negative, b)

    def as_row(self) -> dict:
        return asdict(self)


def _census_from(kappas: dict, metric: WordMetric, n: int) -> SignCensus:
    pos = zero = neg = 0
    for r in range(1, n + 1):
        for g in metric.sphere(r):
            k = kappas[g]
            if k > 0:
                pos += 1
            elif k < 0:
                neg += 1
            else:
                zero += 1
    return SignCensus(n, pos, zero, neg, metric.table.ball_size(n))


def sign_census(metric: WordMetric, n: int, kappas: dict | None = None) -> SignCensus:
    kappas = kappas if kappas is not None else kappa_table(metric, n)
    return _census_from(kappas, metric, n)


def average_kappa(metric: WordMetric, n: int, kappas: dict | None = None) -> Fraction:
    """Mean of κ over the ball B_n, using the convention κ(e) := 0."""
    kappas = kappas if kappas is not None else kappa_table(metric, n)
    total = sum((kappas[g] for r in range(1, n + 1) for g in metric.sphere(r)), Fraction(0))
    return total / metric.table.ball_size(n)


def damping_bound(ball_k: int, ball_n: int, k: int) -> Fraction:
    """Bound on |average κ over B_n| from |κ| <= 2 on B_k and |κ(g)| <= 2/|g| outside."""
    return (2 * ball_k + Fraction(2, k) * (ball_n - ball_k)) / ball_n


@dataclass
class CensusRow:
    n: int
    ball_size: int
    positive: int
    zero: int
    negative: int
    average_kappa: Fraction


def census_rows(metric: WordMetric, n: int, kappas: dict | None = None) -> list[CensusRow]:
    """Cumulative sign counts and average κ over B_r for r = 0..n (κ(e) counted as 0)."""
    if kappas is None:
        kappas = kappa_table(metric, n)
    rows = []
    pos = zero = neg = 0
    total = Fraction(0)
    for r in range(0, n + 1):
        if r:
            for g in metric.sphere(r):
                k = kappas[g]
                total += k
                if k > 0:
                    pos += 1
                elif k < 0:
                    neg += 1
                else:
                    zero += 1
        b = metric.table.ball_size(r)
        rows.append(CensusRow(r, b, pos, zero, neg, total / b))
    return rows


def free_group_average_closed_form(rank: int, n: int) -> Fraction:
    """Average κ over B_n(F_rank) with κ(e) := 0, from shell sizes 2k(2k-1)^(m-1)."""
    two_k = 2 * rank
    shells = [1] + [two_k * (two_k - 1) ** (m - 1) for m in range(1, n + 1)]
    kappa_m = [Fraction(0)] + [Fraction(2 - 2 * rank, m * rank) for m in range(1, n + 1)]
    return sum(s * k for s, k in zip(shells, kappa_m)) / sum(shells)


# Heisenberg low-height analysis


def in_sector(A: int, B: int, C: int) -> bool:
    return A > B > 0 and C > 0 and C <= A * A - A * B and 5 * B >= A and 5 * B < 2 * A


def heisenberg_lowheight_predict(A: int, B: int, C: int) -> str:
    """Predicted sign of κ(a^A b^B c^C) at low height from C mod A."""
    if not in_sector(A, B, C):
        raise OutsideRegion(f"({A},{B},{C}) is outside the low-height sector")
    r = C % A
    if r == 0 or A - B < r <= A - 1:
        return "-"
    if 1 <= r <= B:
        return "+"
    return "0"


def heisenberg_sector_verify(metric: WordMetric, n: int, kappas: dict | None = None,
                             raise_on_mismatch: bool = True) -> VerificationReport:
    report = VerificationReport("heisenberg-sector")
    kappas = kappas if kappas is not None else kappa_table(metric, n)
    group = metric.group
    checked = {"+": 0, "0": 0, "-": 0}
    for r in range(1, n + 1):
        for g in metric.sphere(r):
            A, B, C = g
            # conjugation only moves the central coordinate by ±A, ±B
            shifts = {group.conjugate_by_generator(g, i)[2] - C for i in range(4)}
            if shifts != {B, -B, A, -A} and shifts != {-B, B, A, -A}:
                report.fail(("conjugation-shift", group.format(g), sorted(shifts)))
            if not in_sector(A, B, C):
                continue
            predicted = heisenberg_lowheight_predict(A, B, C)
            checked[predicted] += 1
            actual = sign(kappas[g])
            if predicted != actual:
                report.fail((group.format(g), predicted, actual))
    report.details["checked"] = checked
    report.details["high_height"] = high_height_diagnostic(metric, n, kappas)
    if raise_on_mismatch and not report.passed:
        raise PredictionMismatch(f"{len(report.witnesses)} mismatches, first {report.witnesses[0]}")
    return report


def high_height_diagnostic(metric: WordMetric, n: int, kappas: dict, window: int | None = None) -> dict:
    """Share of κ = 0 among high-height points (A > B > 0) near and away from C + AB = k^2."""
    from math import isqrt

    near = {"+": 0, "0": 0, "-": 0}
    away = {"+": 0, "0": 0, "-": 0}
    for r in range(1, n + 1):
        for g in metric.sphere(r):
            A, B, C = g
            if not (A > B > 0 and C > 0 and C > A * A - A * B):
                continue
            m = C + A * B
            root = isqrt(m)
            gap = min(m - root * root, (root + 1) ** 2 - m)
            w = window if window is not None else A + B
            bucket = near if gap <= w else away
            bucket[sign(kappas[g])] += 1
    return {"window": "A+B" if window is None else window, "near_square": near, "away_from_square": away}


# generator-level zero curvature


def zero_gen_equivalence(metric: WordMetric) -> VerificationReport:
    """Compare "Av(a) = 1 for all a in S" with "S is closed under conjugation by S"."""
    group = metric.group
    report = VerificationReport("zero-gen-equivalence")
    gens = set(group.gens)
    av_witnesses = []
    for i, a in enumerate(group.gens):
        av = avg_conj_length(metric, a)
        if av != 1:
            av_witnesses.append((group.genset.labels[i], str(av)))
    closure_witnesses = []
    for a in group.gens:
        for j in range(group.size):
            c = group.conjugate_by_generator(a, j)
            if c not in gens:
                closure_witnesses.append((group.format(a), group.genset.labels[j], group.format(c), metric.length(c)))
    av_side, closure_side = not av_witnesses, not closure_witnesses
    report.details.update(all_av_one=av_side, conjugation_closed=closure_side)
    report.witnesses = av_witnesses[:5] + closure_witnesses[:5]
    if av_side != closure_side:
        report.status = "fail"
    return report


# shell flux


@dataclass
class ShellFlux:
    c: list
    k: list
    kappa_sums: list
    shell_sizes: list
    checked_c: int
    checked_k: int
    bounds: dict = field(default_factory=dict)


def shell_flux(metric: WordMetric, n_max: int | None = None) -> ShellFlux:
    """Conjugation flux per shell and per annulus ``A_n = S_2n ∪ S_2n+1``.

    Checks ``c_n = n|S| Σ_{S_n} κ`` and ``c_2n + c_2n+1 = k_n - k_n+1`` exactly.
    """
    group = metric.group
    R = metric.radius
    if n_max is None:
        n_max = (R - 3) // 2
    if 2 * n_max + 3 > R:
        raise ValueError(f"shell flux up to n={n_max} needs table radius {2 * n_max + 3}")
    size = group.size
    lengths = metric.table.lengths
    closed = group.closed_length if group.has_closed_length else None

    def conj_len(h):
        if closed is not None:
            return closed(h)
        return lengths.get(h)

    top_c = R - 2
    c, ksum = [], []
    for m in range(0, top_c + 1):
        total = 0
        kap = Fraction(0)
        for g in metric.sphere(m):
            conj = [conj_len(group.conjugate_by_generator(g, i)) for i in range(size)]
            w = sum(m - x for x in conj)
            total += w
            if m:
                kap += Fraction(w, m * size)
        c.append(total)
        ksum.append(kap)
        if m and total != m * size * kap:
            raise IdentityViolation(f"c_{m} = {total} but n|S|Σκ = {m * size * kap}")

    def annulus_flux(n):
        if n == 0:
            # A_-1 is empty
            return 0
        total = 0
        for m in (2 * n, 2 * n + 1):
            for g in metric.sphere(m):
                for i in range(size):
                    x = conj_len(group.conjugate_by_generator(g, i))
                    if x is not None and x in (2 * n - 2, 2 * n - 1):
                        total += m - x
        return total

    k = [annulus_flux(n) for n in range(0, n_max + 2)]
    for n in range(0, n_max + 1):
        if c[2 * n] + c[2 * n + 1] != k[n] - k[n + 1]:
            raise IdentityViolation(
                f"annulus {n}: c_{2 * n} + c_{2 * n + 1} = {c[2 * n] + c[2 * n + 1]} but k_n - k_n+1 = {k[n] - k[n + 1]}"
            )
    bounds = {}
    for n in range(1, n_max + 1):
        annulus = metric.sphere(2 * n) + metric.sphere(2 * n + 1)
        bounds[n] = {"|S_2n|": len(metric.sphere(2 * n)), "k_n": k[n], "2|S||A_n|": 2 * size * len(annulus)}
    return ShellFlux(c, k, ksum, metric.table.shell_sizes, len(c), n_max + 1, bounds)


# products and embeddings


def product_av(m1: WordMetric, m2: WordMetric, x: Element, y: Element) -> Fraction:
    """Conjugation average of (x, y) under the split generating set, from factor data."""
    s1, s2 = m1.group.size, m2.group.size
    lx, ly = m1.length(x), m2.length(y)
    if lx == 0 and ly == 0:
        return Fraction(0)
    av_x = avg_conj_length(m1, x)
    av_y = avg_conj_length(m2, y)
    return (s1 * av_x + s1 * ly + s2 * lx + s2 * av_y) / (s1 + s2)


def embedding_condition(mode: str, n: int, n_gens: int) -> int:
    """The quantity whose sign decides admissibility: must be < 0 (pos) or > 0 (neg)."""
    if mode == "pos":
        return -factorial(n) + 2 * n + 2 * n_gens
    if mode == "neg":
        return 2 * n - 2 - 2 * n_gens
    raise ValueError(f"mode must be 'pos' or 'neg', not {mode!r}")


def smallest_admissible_degree(mode: str, n_gens: int) -> int:
    for n in range(4, 9):
        c = embedding_condition(mode, n, n_gens)
        if (mode == "pos" and c < 0) or (mode == "neg" and c > 0):
            return n
    raise ConditionNotMet(f"no degree <= 8 works for mode {mode} with |S| = {n_gens}")


def embedding_check(base: GroupOracle, n: int, mode: str, radius: int = 4,
                    base_metric: WordMetric | None = None) -> VerificationReport:
    """Check g -> (g, σ) into G x Symm(n) with S ⊠ S_pos or S ⊠ S_neg."""
    cond = embedding_condition(mode, n, base.size)
    if (mode == "pos" and cond >= 0) or (mode == "neg" and cond <= 0):
        raise ConditionNotMet(f"degree {n} too small for mode {mode}: condition value {cond}")
    sym = make_symmetric(n, mode)
    prod = make_product(base, sym)
    base_metric = base_metric or WordMetric(base, radius)
    # lengths in the product only ever need base lengths up to radius + 2 + 2
    pmetric = WordMetric(prod, 0)
    if not prod.has_closed_length:
        pmetric = WordMetric(prod, radius + sym.closed_length(sym.sigma) + 2)
    report = VerificationReport(f"embedding-{mode}")
    sigma = sym.sigma
    sigma_len = sym.closed_length(sigma)
    want = ">" if mode == "pos" else "<"
    elements = base_metric.ball(radius)[1:]
    for g in elements:
        img = (g, sigma)
        if pmetric.length(img) != base_metric.length(g) + sigma_len:
            report.fail(("isometry", base.format(g)))
        k = kappa(pmetric, img)
        if (want == ">" and k <= 0) or (want == "<" and k >= 0):
            report.fail(("sign", base.format(g), str(k)))
    bound = 2 if mode == "pos" else 1
    worst = 0
    small = base_metric.ball(min(radius, 2))
    for g in small:
        for h in small:
            gh = base.multiply(g, h)
            d = pmetric.distance((gh, sigma), prod.multiply((g, sigma), (h, sigma)))
            worst = max(worst, d)
            if d > bound:
                report.fail(("defect", base.format(g), base.format(h), d))
    report.details.update(degree=n, condition=cond, sigma_length=sigma_len, elements=len(elements),
                          max_defect=worst, defect_bound=bound)
    if not report.passed and any(w[0] == "sign" for w in report.witnesses):
        raise SignViolation(f"{mode} embedding: {report.witnesses[0]}")
    return report


def negembed_homomorphic_check(base: GroupOracle, n: int, radius: int = 4,
                               base_metric: WordMetric | None = None) -> VerificationReport:
    """G -> G * F_n is an isometry and every nontrivial element of G * F_n has κ < 0."""
    if not 2 * n > base.size:
        raise ConditionNotMet(f"need n > |T|/2 = {base.size / 2}")
    H = make_free_product_free(base, n)
    hmetric = WordMetric(H, radius if H.has_closed_length else radius + 2)
    base_metric = base_metric or WordMetric(base, radius)
    report = VerificationReport("negembed-homomorphic")
    for g in base_metric.ball(radius):
        if hmetric.length(H.embed(g)) != base_metric.length(g):
            report.fail(("isometry", base.format(g)))
    counts = {"+": 0, "0": 0, "-": 0}
    for g in hmetric.ball(radius)[1:]:
        s = sign(kappa(hmetric, g))
        counts[s] += 1
        if s != "-":
            report.fail(("sign", H.format(g), s))
    report.details.update(rank=n, ball=hmetric.table.ball_size(radius), signs=counts)
    if any(w[0] == "sign" for w in report.witnesses):
        raise SignViolation(f"non-negative curvature at {report.witnesses[0]}")
    return report


def zhaszeroes_check(metric: WordMetric, z: Element, n: int) -> VerificationReport:
    """κ(z^k) = 0 for 1 <= k <= n when z generates a normal infinite cyclic subgroup."""
    group = metric.group
    zi = group.inverse(z)
    for i in range(group.size):
        c = group.conjugate_by_generator(z, i)
        if c != z and c != zi:
            raise NotNormal(f"{group.genset.labels[i]} conjugates {group.format(z)} to {group.format(c)}")
    report = VerificationReport("zhaszeroes")
    values = {}
    for k in range(1, n + 1):
        zk = group.power(z, k)
        kap = kappa(metric, zk)
        values[k] = kap
        if kap != 0:
            report.fail((k, str(kap)))
    report.details["kappa"] = values
    return report


def finite_outside_ball_evidence(metric: WordMetric, R: int, kappas: dict | None = None) -> VerificationReport:
    """Find g with R < |g| <= R + 4 and κ(g) <= 0 (an infinite group cannot be positive there)."""
    top = min(R + 4, metric.radius - 2) if not metric.group.has_closed_length else R + 4
    report = VerificationReport("finite-outside-ball")
    for r in range(R + 1, top + 1):
        for g in metric.sphere(r):
            k = kappas[g] if kappas and g in kappas else kappa(metric, g)
            if k <= 0:
                report.details["witness"] = (metric.group.format(g), str(k))
                return report
    report.status = "fail"
    return report


def sample_elements(metric: WordMetric, radius: int, count: int, seed: int) -> list:
    rng = random.Random(seed)
    pool = metric.ball(radius)[1:]
    if len(pool) <= count:
        return list(pool)
    return rng.sample(pool, count)
