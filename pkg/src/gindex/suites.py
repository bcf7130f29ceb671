"""Identity suites: each runs a family of exact cross-checks up to ``nmax``.

Parts of a suite that depend on a brute-force oracle are clamped to that
oracle's size cap; the clamped range is visible in the check labels.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from math import factorial

from . import families as fam
from . import oracles
from .combinat import types_of
from .expansions import (
    ENUMERATION_CAP,
    expand_comtet,
    expand_inversion,
    expand_leibniz,
    expand_recurrence,
    expand_types,
    p_by_enumeration,
    p_by_recurrence,
    p_by_tableaux,
    partition_aggregates,
    rising_factorial_check,
)
from .grammars import Grammar, MPoly, random_grammar, u_dg_expansion_check
from .report import CheckReport, check_equal
from .tableaux import G, gamma_decompose_fiber, gamma_pairing, lambda_factorial, rho_fiber, syt_all

STIRLING_K2_MAX = oracles.STIRLING_PERM_CAP // 2
EULER_NUMBER_MAX = oracles.PERM_CAP - 1


def expansions_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """Recurrence, Leibniz, inversion-sequence, Comtet and type constructions agree."""
    report = CheckReport("expansions")
    for n in range(1, nmax + 1):
        base = expand_recurrence(n).body
        others = {
            "leibniz": expand_leibniz(n),
            "inversion": expand_inversion(n),
            "comtet": expand_comtet(n),
            "types": expand_types(n),
        }
        for name, exp in others.items():
            check_equal(report, f"n={n} recurrence = {name}", base, exp.body)
    return report


def pkmu_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """``p_{k,mu}`` by recurrence, tableau sum and (within the cap) enumeration."""
    report = CheckReport("pkmu")
    for n in range(1, nmax + 1):
        for t in types_of(n):
            values = {"recurrence": p_by_recurrence(t), "tableau": p_by_tableaux(t)}
            if n <= ENUMERATION_CAP:
                values["enumeration"] = p_by_enumeration(t)
            report.add(f"p{t}", len(set(values.values())) == 1, repr(values))
        total = sum(p_by_recurrence(t) for t in types_of(n))
        check_equal(report, f"n={n} sum of p = n!", total, factorial(n))
        lhs, rhs = rising_factorial_check(n)
        check_equal(report, f"n={n} rising factorial", lhs, rhs)
    return report


def series_suite(nmax: int, kmax: int | None = None, order: int = 20) -> CheckReport:
    """Operator series identities for ``k <= kmax`` and the two classical series."""
    report = CheckReport("series")
    for n in range(1, nmax + 1):
        for k in range(1, (kmax or 3) + 1):
            report.extend(fam.series_identity_checks(n, k, order))
        report.extend(fam.classical_series_checks(n, order))
    return report


def syt_families_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """SYT sums for ``A_n``, ``C_n`` and ``S_n`` against descent oracles."""
    report = CheckReport("syt-families")
    for n in range(1, nmax + 1):
        check_equal(report, f"A_{n} syt = descents", fam.eulerian(n, "syt"), fam.eulerian(n, "descents"))
        if n <= STIRLING_K2_MAX:
            check_equal(report, f"C_{n} syt = Q_n(2) descents", fam.second_order(n, 2, "syt"),
                        fam.second_order(n, 2, "descents"))
        check_equal(report, f"S_{n} two-column syt = simsun", fam.andre(n, "syt"), fam.andre(n, "simsun"))
    return report


def corollaries_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """Weighted tableau counts: ``n!``, ``(2n-1)!!`` and Euler numbers."""
    report = CheckReport("corollaries")
    for n in range(1, nmax + 1):
        tabs = list(syt_all(n))
        check_equal(report, f"n={n} sum G_T = n!", sum(G(t) for t in tabs), factorial(n))
        check_equal(report, f"n={n} sum G_T lambda! = (2n-1)!!", sum(G(t) * lambda_factorial(t) for t in tabs),
                    oracles.double_factorial(2 * n - 1))
        if n <= EULER_NUMBER_MAX:
            two_col = sum(G(t) for t in tabs if t.shape[0] <= 2)
            check_equal(report, f"n={n} two-column sum G_T = E_{n + 1}", two_col, oracles.alternating_count(n + 1))
    return report


def fibers_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """Fiber sums of ``rho`` and the class-1/class-2 bijection."""
    report = CheckReport("fibers")
    for n in range(1, nmax + 1):
        for t in syt_all(n):
            label = f"T={t.to_json()['rows']}"
            fiber = rho_fiber(t)
            report.add(f"{label} fiber sum", sum(G(z) for z in fiber) == G(t),
                       f"{t}\nsum over fiber {sum(G(z) for z in fiber)} != G_T {G(t)}")
            parts = gamma_decompose_fiber(t)
            report.add(f"{label} |class 1| = |class 2|", len(parts[1]) == len(parts[2]),
                       f"{len(parts[1])} vs {len(parts[2])}")
            try:
                gamma_pairing(t)
                report.add(f"{label} pairing", True)
            except ValueError as exc:
                report.add(f"{label} pairing", False, str(exc))
    return report


def _random_grammar_checks(report: CheckReport, nmax: int, count: int = 20, seed: int = 2024) -> None:
    rng = random.Random(seed)
    for i in range(count):
        g = random_grammar(rng)
        letters = sorted(g.alphabet)
        u = MPoly.var(rng.choice(letters))
        target = MPoly.var(rng.choice(letters))
        for n in range(1, nmax + 1):
            report.add(f"random grammar #{i} n={n}", u_dg_expansion_check(g, u, target, n), f"{g}; u={u}; target={target}")


def grammars_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """Dumont and Andre grammars, and the tableau expansion of ``(u D_G)^n``."""
    report = CheckReport("grammars")
    for n in range(1, nmax + 1):
        check_equal(report, f"Dumont n={n}", fam.eulerian(n, "grammar"), fam.eulerian(n, "descents"))
        simsun = fam.andre(n, "simsun")
        check_equal(report, f"G1 n={n}", fam.andre(n, "grammar1"), simsun)
        check_equal(report, f"G2 n={n}", fam.andre(n, "grammar2"), simsun)
    dumont = Grammar.parse("x -> y; y -> y")
    g2 = Grammar.parse("x -> y; y -> 1")
    x, y = MPoly.var("x"), MPoly.var("y")
    for n in range(1, min(nmax, 6) + 1):
        report.add(f"Dumont (xD)^{n}(y) expansion", u_dg_expansion_check(dumont, x, y, n))
        report.add(f"G2 (xD)^{n}(x) expansion", u_dg_expansion_check(g2, x, x, n))
    _random_grammar_checks(report, min(nmax, 5))
    return report


def families_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """Every family by every route, plus gamma and Frobenius expansions."""
    report = CheckReport("families")
    kmax = kmax or 3

    def agree(label: str, routes: dict) -> None:
        values = {str(v) for v in routes.values()}
        report.add(label, len(values) == 1, "\n".join(f"{m}: {v}" for m, v in routes.items()))

    for n in range(1, min(nmax, oracles.PERM_CAP) + 1):
        agree(f"eulerian n={n}", fam.all_routes("eulerian", n))
        check_equal(report, f"classic n={n}", fam.eulerian_classic(n, "descents") * fam.X, fam.eulerian(n))
        agree(f"andre n={n}", fam.all_routes("andre", n))
    for n in range(0, min(nmax, 6) + 1):
        for k in range(1, kmax + 1):
            agree(f"one-over-k n={n} k={k}", fam.all_routes("one-over-k", n, k))
    for n in range(0, min(nmax, STIRLING_K2_MAX) + 1):
        agree(f"second-order n={n}", fam.all_routes("second-order", n))
        agree(f"lap n={n}", fam.all_routes("lap", n))
        if n:
            check_equal(report, f"C_n(x;1) = A_n n={n}", fam.second_order(n, 1), fam.eulerian(n))
            check_equal(report, f"lap convolution = 2^n A_n n={n}", fam.lap_convolution(n), 2**n * fam.eulerian(n))
    for n in range(0, min(nmax, oracles.SIGNED_PERM_CAP) + 1):
        agree(f"type-b n={n}", fam.all_routes("type-b", n))
    for n in range(1, nmax + 1):
        report.extend(fam.gamma_checks(n) if n <= oracles.PERM_CAP else CheckReport("gamma skipped"))
        report.extend(fam.frobenius_check(n))
    return report


def aggregates_suite(nmax: int, kmax: int | None = None) -> CheckReport:
    """Stirling and Eulerian sums over the coefficients ``a(n, lambda)``."""
    report = CheckReport("aggregates")
    for n in range(1, nmax + 1):
        agg = partition_aggregates(n)
        ks = range(1, n + 1)
        check_equal(report, f"n={n} first kind", agg["all"], {k: oracles.stirling1(n, k) for k in ks})
        check_equal(report, f"n={n} second kind", agg["ones"], {k: oracles.stirling2(n, k) for k in ks})
        check_equal(report, f"n={n} eulerian", agg["length"], {k: oracles.eulerian_number(n, k) for k in ks})
    return report


SUITES: dict[str, Callable[..., CheckReport]] = {
    "expansions": expansions_suite,
    "pkmu": pkmu_suite,
    "thm1.1": series_suite,
    "series": series_suite,
    "syt-families": syt_families_suite,
    "corollaries": corollaries_suite,
    "fibers": fibers_suite,
    "grammars": grammars_suite,
    "families": families_suite,
    "aggregates": aggregates_suite,
}


def run_suite(name: str, nmax: int, kmax: int | None = None) -> CheckReport:
    if name == "all":
        report = CheckReport("all")
        for suite in dict.fromkeys(SUITES.values()):
            report.extend(suite(nmax, kmax))
        return report
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name](nmax, kmax)
