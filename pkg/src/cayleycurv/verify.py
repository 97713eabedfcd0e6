"""Named verification suites run by ``cayleycurv verify``.

Each suite returns a list of :class:`VerificationReport`; a suite passes when
every report does. Radii are the desk-scale defaults; all comparisons are exact.
"""

from __future__ import annotations

import random
from math import factorial
from fractions import Fraction
from typing import Callable

from .census import (
    VerificationReport,
    average_kappa,
    damping_bound,
    embedding_check,
    finite_outside_ball_evidence,
    free_group_average_closed_form,
    heisenberg_sector_verify,
    kappa_table,
    negembed_homomorphic_check,
    product_av,
    shell_flux,
    sign_census,
    smallest_admissible_degree,
    zero_gen_equivalence,
    zhaszeroes_check,
)
from .core import GroupError
from .curvature import (
    avg_conj_length,
    ball_comparison,
    ball_from_sphere,
    graph_laplacian_check,
    kappa,
    kappa_r,
    sign,
    spherical_comparison,
)
from .groups import (
    make_abelian,
    make_dihedral_inf,
    make_free,
    make_free_product_free,
    make_heisenberg,
    make_product,
    make_raag,
    make_symmetric,
    make_z2_rtimes_z6,
)
from .groups.heisenberg import heisenberg_star_length
from .groups.raag import cycle_graph, empty_graph, path_graph, random_graph
from .groups.vagenset import dihedral_flat_genset, semidirect_flat_genset
from .metric import WordMetric, build_ball
from .transport import brute_force_assignment, kappa_transport, min_cost_assignment, transport_instance


def f2xz():
    return make_product(make_free(2), make_abelian(1, ["z"]))


def raag_graphs(seed: int = 0):
    graphs = {"empty2": empty_graph(2), "edge": path_graph(2), "path3": path_graph(3), "square": cycle_graph(4)}
    for s in range(3):
        graphs[f"random5-seed{seed + s}"] = random_graph(5, seed + s)
    return graphs


def zoo() -> list[tuple[str, object, int]]:
    """(name, group, table radius) for the groups exercised by the generic suites."""
    return [
        ("F2", make_free(2), 8),
        ("F3", make_free(3), 5),
        ("Z2", make_abelian(2), 8),
        ("Z3", make_abelian(3), 6),
        ("Dinf", make_dihedral_inf(), 10),
        ("H3", make_heisenberg(), 10),
        ("Z2xZ6", make_z2_rtimes_z6(), 10),
        ("F2xZ", f2xz(), 8),
        ("RAAG-path3", make_raag(path_graph(3)), 6),
        ("RAAG-square", make_raag(cycle_graph(4)), 5),
        ("Sym4-pos", make_symmetric(4, "pos"), 3),
        ("Sym5-neg", make_symmetric(5, "neg"), 6),
        ("Sym4-all", make_symmetric(4, "all"), 2),
        ("Z2*F2", make_free_product_free(make_abelian(2), 2), 4),
    ]


# suites


def suite_free_formulas(radius: int = 6) -> list[VerificationReport]:
    reports = []
    for n in (2, 3):
        G = make_free(n)
        M = WordMetric(G, radius)
        rep = VerificationReport(f"free-formulas-F{n}")
        count = 0
        for g in M.ball(radius)[1:]:
            m = len(g)
            av = avg_conj_length(M, g)
            k = kappa(M, g)
            count += 1
            if av != m + 2 - Fraction(2, n) or k != Fraction(2 - 2 * n, n * m):
                rep.fail((G.format(g), str(av), str(k)))
        rep.details["elements"] = count
        reports.append(rep)
    return reports


def suite_f2xz() -> list[VerificationReport]:
    G = f2xz()
    M = WordMetric(G, 2)
    rep = VerificationReport("f2xz")
    e = G.identity()
    a, b = G.parse_word("a"), G.parse_word("b")
    for name, g in (("a", a), ("b", b)):
        if avg_conj_length(M, g) != Fraction(5, 3) or kappa(M, g) != Fraction(-2, 3):
            rep.fail((name, str(avg_conj_length(M, g))))
    sphere = spherical_comparison(M, e, a, 1)
    ball = ball_comparison(M, e, a, 1)
    if ball != ball_from_sphere(1, sphere, G.size):
        rep.fail(("weighted-average", str(ball)))
    ball_no_center = ball_comparison(M, e, a, 1, include_center=False)
    numerator_only = 1 - Fraction(G.size * sphere, G.size + 1)
    rep.details.update(
        kappa_sphere=1 - sphere,
        kappa_ball_with_identity=1 - ball,
        kappa_ball_without_identity=1 - ball_no_center,
        kappa_ball_center_dropped_from_numerator=numerator_only,
        note="-3/7 arises only when d(x, y) is dropped from the numerator but w = e still counts in |B_1|",
    )
    if numerator_only != Fraction(-3, 7):
        rep.fail(("ball-convention", str(numerator_only)))
    return [rep]


def suite_symm_sign(degrees=(4, 5, 6)) -> list[VerificationReport]:
    rep = VerificationReport("symm-sign")
    for n in degrees:
        for mode in ("pos", "neg"):
            G = make_symmetric(n, mode)
            M = WordMetric(G, 0)
            s = G.sigma
            av = avg_conj_length(M, s)
            if mode == "pos":
                want_av, want_len = Fraction(factorial(n) + 2 * n - 6, factorial(n) - 3), 2
                ok_sign = kappa(M, s) > 0
                if len(G.gens) != factorial(n) - 3:
                    rep.fail((n, mode, "size", len(G.gens)))
            else:
                want_av, want_len = Fraction(3 * n - 1, n + 1), 1
                ok_sign = kappa(M, s) < 0
                if len(G.gens) != n + 1:
                    rep.fail((n, mode, "size", len(G.gens)))
            if av != want_av or M.length(s) != want_len or not ok_sign:
                rep.fail((n, mode, str(av), M.length(s)))
            rep.details[f"Av(sigma) n={n} {mode}"] = av
            if mode == "pos":
                # recount the conjugates that land on sigma^±1 instead of trusting the count
                commuting = sum(1 for i in range(G.size) if G.conjugate_by_generator(s, i) == s)
                inverting = sum(1 for i in range(G.size) if G.conjugate_by_generator(s, i) == G.inverse(s))
                rep.details[f"commuting n={n}"] = commuting
                rep.details[f"inverting n={n}"] = inverting
    if 4 in degrees and rep.details.get("Av(sigma) n=4 pos") != Fraction(26, 21):
        rep.fail(("n=4 pos", "Av(sigma) != 26/21"))
    return [rep]


def suite_heisenberg_star(max_length: int = 14, radius: int = 16) -> list[VerificationReport]:
    H = make_heisenberg()
    table = build_ball(H, radius)
    rep = VerificationReport("heisenberg-star")
    checked = 0
    for g, n in table.lengths.items():
        A, B, C = g
        if A > B > 0 and C > 0 and n <= max_length:
            checked += 1
            if heisenberg_star_length(g) != n:
                rep.fail((H.format(g), heisenberg_star_length(g), n))
    rep.details["checked"] = checked
    return [rep]


def suite_heisenberg_sector(radii=(14, 16)) -> list[VerificationReport]:
    H = make_heisenberg()
    top = max(radii)
    M = WordMetric(H, top + 2)
    K = kappa_table(M, top)
    reports = []
    for n in radii:
        census = sign_census(M, n, K)
        rep = VerificationReport(f"heisenberg-census-n{n}")
        floor = Fraction(census.ball_size, 200)
        for label, count in (("+", census.positive), ("0", census.zero), ("-", census.negative)):
            if count < floor:
                rep.fail((label, count, str(floor)))
        rep.details.update(ball=census.ball_size, positive=census.positive, zero=census.zero, negative=census.negative)
        reports.append(rep)
        reports.append(heisenberg_sector_verify(M, n, K, raise_on_mismatch=False))
        reports[-1].check = f"heisenberg-sector-n{n}"
    return reports


def suite_raag_dichotomy(radius: int = 5) -> list[VerificationReport]:
    reports = []
    for name, graph in raag_graphs().items():
        G = make_raag(graph)
        M = WordMetric(G, radius)
        rep = VerificationReport(f"raag-dichotomy-{name}")
        K = kappa_table(M, radius)
        central = 0
        for g, k in K.items():
            c = G.is_central(g)
            central += c
            if (k == 0) != c or k > 0:
                rep.fail((G.format(g), str(k), c))
        # pair inequality |t^-1 g t| + |t g t^-1| >= 2|g| behind the dichotomy
        for g in M.ball(min(radius, 3))[1:]:
            conj = M.conjugate_lengths(g)
            n = len(g)
            for i in range(G.size):
                j = G.genset.inverse_pairing[i]
                if conj[i] + conj[j] < 2 * n:
                    rep.fail(("pair", G.format(g), G.genset.labels[i]))
            suff = G.suffixes(g)
            for i in range(G.size):
                x = G.gens[i][0]
                shorter = len(G.apply_generator(g, i)) == n - 1
                if shorter != (-x in suff):
                    rep.fail(("suffix", G.format(g), G.genset.labels[i]))
        rep.details.update(edges=sorted(graph.edges), elements=len(K), central=central)
        reports.append(rep)
    return reports


def suite_virtabelpos(max_n: int = 6) -> list[VerificationReport]:
    """Signs for every n, and the exact conjugation averages where the geodesic spelling is the short one."""
    G = make_z2_rtimes_z6()
    M = WordMetric(G, max_n + 6)
    rep = VerificationReport("virtabelpos")
    ab = G.parse_word("a b")
    exact = {}
    for n in range(1, max_n + 1):
        w = G.power(ab, n)
        v = G.power(G.gens[0], n)
        av_w, av_v = avg_conj_length(M, w), avg_conj_length(M, v)
        exact[n] = {"|(ab)^n|": M.length(w), "Av((ab)^n)": av_w, "Av(a^n)": av_v}
        if not (kappa(M, w) > 0 and kappa(M, v) < 0):
            rep.fail(("sign", n))
        if n >= 2 and (av_w != n + Fraction(4, 3) or av_v != n + Fraction(1, 3) or M.length(w) != n + 2):
            rep.fail(("exact", n, str(av_w), str(av_v)))
    rep.details["values"] = exact
    rep.details["n=1"] = "|ab| = 2 < 3, so the closed forms n + 4/3 and n + 1/3 start at n = 2"
    return [rep]


def suite_va_genset(radius: int = 6) -> list[VerificationReport]:
    reports = []
    va = semidirect_flat_genset(make_z2_rtimes_z6())
    M = WordMetric(va.group, radius + 2)
    rep = VerificationReport("va-genset-Z2xZ6")
    count = 0
    for g in M.ball(radius)[1:]:
        if g[2] == 0:
            count += 1
            if kappa(M, g) != 0:
                rep.fail((va.group.format(g), str(kappa(M, g))))
    rep.details.update(generators=len(va.elements), U=len(va.U), V=len(va.V), T_prime=len(va.T_prime), checked=count)
    reports.append(rep)

    D = make_dihedral_inf()
    vd = dihedral_flat_genset(D)
    MD = WordMetric(vd.group, 12)
    rep = VerificationReport("va-genset-Dinf")
    for k in range(1, 5):
        g = D.rotation(k)
        if kappa(MD, g) != 0:
            rep.fail((k, str(kappa(MD, g))))
    rep.details["generators"] = [D.format(s) for s in vd.elements]
    reports.append(rep)

    MS = WordMetric(D, 0)
    rep = VerificationReport("dinf-standard")
    if avg_conj_length(MS, D.gens[0]) != 2:
        rep.fail(("Av(a)", str(avg_conj_length(MS, D.gens[0]))))
    reports.append(rep)
    z = zhaszeroes_check(MS, D.rotation(1), 4)
    z.check = "zhaszeroes-Dinf"
    reports.append(z)
    zero = zero_gen_equivalence(MS)
    reports.append(zero)
    return reports


def suite_laplacian(samples: int = 500, seed: int = 0) -> list[VerificationReport]:
    rep = VerificationReport("laplacian")
    groups = zoo()
    per = -(-samples // len(groups))
    rng = random.Random(seed)
    total = 0
    for name, G, radius in groups:
        M = WordMetric(G, radius)
        top = radius - 2 if not G.has_closed_length else radius
        pool = M.ball(max(top, 1))[1:]
        pick = pool if len(pool) <= per else rng.sample(pool, per)
        for x in pick:
            if total >= samples:
                break
            try:
                graph_laplacian_check(M, x)
            except GroupError as exc:
                rep.fail((name, str(exc)))
            total += 1
    rep.details["samples"] = total
    return [rep]


def suite_product_formula(pairs: int = 200, seed: int = 0) -> list[VerificationReport]:
    rep = VerificationReport("product-formula")
    rng = random.Random(seed)
    factor_pairs = [
        (make_free(2), make_abelian(1, ["z"]), 5, 5),
        (make_heisenberg(), make_dihedral_inf(), 8, 6),
        (make_symmetric(4, "pos"), make_z2_rtimes_z6(), 3, 7),
    ]
    per = -(-pairs // len(factor_pairs))
    done = 0
    for G1, G2, r1, r2 in factor_pairs:
        M1, M2 = WordMetric(G1, r1), WordMetric(G2, r2)
        P = make_product(G1, G2)
        prod_radius = 0 if P.has_closed_length else r1 + r2
        x_pool = M1.ball(r1 - 2 if not G1.has_closed_length else r1)
        y_pool = M2.ball(r2 - 2 if not G2.has_closed_length else r2)
        if not P.has_closed_length:
            x_pool = [x for x in x_pool if M1.length(x) <= 3]
            y_pool = [y for y in y_pool if M2.length(y) <= 3]
            prod_radius = 3 + 3 + 2
        MP = WordMetric(P, prod_radius)
        for _ in range(per):
            if done >= pairs:
                break
            x, y = rng.choice(x_pool), rng.choice(y_pool)
            direct = avg_conj_length(MP, (x, y))
            formula = product_av(M1, M2, x, y)
            done += 1
            if direct != formula:
                rep.fail((P.format((x, y)), str(direct), str(formula)))
    M1, M2 = WordMetric(make_free(2), 2), WordMetric(make_abelian(1, ["z"]), 2)
    if product_av(M1, M2, M1.group.parse_word("a"), M2.group.identity()) != Fraction(5, 3):
        rep.fail(("F2xZ", "a"))
    rep.details["pairs"] = done
    return [rep]


def suite_transport(radius: int = 5) -> list[VerificationReport]:
    reports = []
    for name, G in (("F2", make_free(2)), ("Z2", make_abelian(2)), ("Dinf", make_dihedral_inf()), ("F2xZ", f2xz())):
        M = WordMetric(G, radius)
        rep = VerificationReport(f"transport-dominance-{name}")
        e = G.identity()
        instances = 0
        for g in M.ball(radius)[1:]:
            kt = kappa_transport(M, g, 1)
            kb = kappa_r(M, g, 1, "ball")
            if kt < kb:
                rep.fail(("dominance", G.format(g), str(kt), str(kb)))
            if name == "Z2" and kt < 0:
                rep.fail(("abelian-nonnegative", G.format(g), str(kt)))
            inst = transport_instance(M, e, g, 1)
            if inst.size <= 7:
                instances += 1
                if min_cost_assignment(inst.cost) != brute_force_assignment(inst.cost):
                    rep.fail(("solver", G.format(g)))
        rep.details["brute_force_instances"] = instances
        reports.append(rep)
    return reports


def suite_embeddings(radius: int = 4) -> list[VerificationReport]:
    reports = []
    for G in (make_abelian(1), make_abelian(2)):
        for mode in ("pos", "neg"):
            n = smallest_admissible_degree(mode, G.size)
            try:
                rep = embedding_check(G, n, mode, radius)
            except GroupError as exc:
                rep = VerificationReport(f"embedding-{mode}", "fail", [str(exc)])
            rep.check = f"embedding-{mode}-{G.name}-n{n}"
            reports.append(rep)
    try:
        rep = negembed_homomorphic_check(make_abelian(2), 3, radius)
    except GroupError as exc:
        rep = VerificationReport("negembed-homomorphic", "fail", [str(exc)])
    reports.append(rep)
    return reports


def suite_shell_flux() -> list[VerificationReport]:
    reports = []
    for G, radius in ((make_free(2), 9), (make_dihedral_inf(), 13), (make_heisenberg(), 15),
                      (make_z2_rtimes_z6(), 13)):
        rep = VerificationReport(f"shell-flux-{G.name}")
        try:
            sf = shell_flux(WordMetric(G, radius))
            rep.details.update(c=sf.c, k=sf.k, shells_checked=sf.checked_c, annuli_checked=sf.checked_k)
        except GroupError as exc:
            rep.fail(str(exc))
        reports.append(rep)
    return reports


def suite_damping(free_radius: int = 8, heis_radius: int = 16) -> list[VerificationReport]:
    reports = []
    for G, n_top in ((make_free(2), free_radius), (make_heisenberg(), heis_radius)):
        M = WordMetric(G, n_top + 2)
        K = kappa_table(M, n_top)
        rep = VerificationReport(f"damping-{G.name}")
        averages = {n: average_kappa(M, n, K) for n in range(1, n_top + 1)}
        pairs = 0
        for n in range(2, n_top + 1):
            for k in range(1, n):
                pairs += 1
                bound = damping_bound(M.table.ball_size(k), M.table.ball_size(n), k)
                if abs(averages[n]) > bound:
                    rep.fail((k, n, str(averages[n]), str(bound)))
        if G.name == "F2":
            for n, avg in averages.items():
                if avg != free_group_average_closed_form(2, n):
                    rep.fail(("closed-form", n, str(avg)))
        rep.details.update(pairs=pairs, averages={n: str(a) for n, a in averages.items()})
        reports.append(rep)
    return reports


def suite_basic_properties(radius: int = 6) -> list[VerificationReport]:
    """Central zeros, generator nonpositivity, range bounds and ball/sphere sign agreement."""
    reports = []
    for name, G, table_radius in zoo():
        if name in ("F3", "Z3", "Z2*F2", "RAAG-square"):
            continue
        n_top = min(radius, table_radius - 4) if not G.has_closed_length else min(radius, table_radius)
        if G.is_finite:
            n_top = table_radius
        M = WordMetric(G, max(table_radius, 2))
        rep = VerificationReport(f"basic-properties-{name}")
        for i, a in enumerate(G.gens):
            if kappa(M, a) > 0:
                rep.fail(("generator", G.genset.labels[i]))
        elements = [g for r in range(1, n_top + 1) for g in M.sphere(r)]
        for g in elements:
            d = M.length(g)
            k1 = kappa(M, g)
            if k1 > 1:
                rep.fail(("kappa<=1", G.format(g)))
            if sign(kappa_r(M, g, 1, "ball")) != sign(k1):
                rep.fail(("sign-agreement", G.format(g)))
            for r in (1, 2):
                if r > M.radius or not M.sphere(r):
                    continue
                if not G.has_closed_length and d + 2 * r > M.radius:
                    continue
                for mode in ("sphere", "ball"):
                    k = kappa_r(M, g, r, mode)
                    if abs(k) > Fraction(2 * r, d):
                        rep.fail(("range", G.format(g), r, mode))
                    if G.is_central(g) and k != 0:
                        rep.fail(("central", G.format(g), r, mode))
        rep.details["elements"] = len(elements)
        reports.append(rep)
    S = make_symmetric(4, "all")
    M = WordMetric(S, 0)
    rep = VerificationReport("complete-graph-zero")
    for g in S.elements():
        if g != S.identity() and kappa(M, g) != 0:
            rep.fail(S.format(g))
    reports.append(rep)
    F = make_free(2)
    M = WordMetric(F, 4)
    rep = VerificationReport("geodesic-power")
    for g in M.ball(4)[1:]:
        if F.is_cyclically_reduced(g) and kappa(M, g) > 0:
            rep.fail(F.format(g))
    reports.append(rep)
    return reports


def suite_finite_outside_ball(max_R: int = 6) -> list[VerificationReport]:
    reports = []
    for name, G, radius in zoo():
        if G.is_finite or name in ("F3", "Z3", "Z2*F2", "RAAG-square"):
            continue
        table_radius = max_R + 4 + (2 if not G.has_closed_length else 0)
        M = WordMetric(G, table_radius)
        rep = VerificationReport(f"finite-outside-ball-{name}")
        for R in range(0, max_R + 1):
            sub = finite_outside_ball_evidence(M, R)
            if not sub.passed:
                rep.fail(R)
        reports.append(rep)
    return reports


SUITES: dict[str, Callable[[], list[VerificationReport]]] = {
    "free-formulas": suite_free_formulas,
    "f2xz": suite_f2xz,
    "symm-sign": suite_symm_sign,
    "heisenberg-star": suite_heisenberg_star,
    "heisenberg-sector": suite_heisenberg_sector,
    "raag-dichotomy": suite_raag_dichotomy,
    "virtabelpos": suite_virtabelpos,
    "va-genset": suite_va_genset,
    "laplacian": suite_laplacian,
    "product-formula": suite_product_formula,
    "transport-dominance": suite_transport,
    "embeddings": suite_embeddings,
    "shell-flux": suite_shell_flux,
    "damping": suite_damping,
    "basic-properties": suite_basic_properties,
    "finite-outside-ball": suite_finite_outside_ball,
}


def run(names) -> list[VerificationReport]:
    if names in ("all", ["all"]):
        names = list(SUITES)
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        out.extend(SUITES[name]())
    return out
