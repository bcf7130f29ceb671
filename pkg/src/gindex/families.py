"""Eulerian-type polynomial families, each available through several routes.

Descent convention: ``eulerian`` counts the final index as a descent, so
``eulerian(n) = x * eulerian_classic(n)``.  Every family function takes a
``method`` argument; the default is the cheapest route, and :func:`all_routes`
computes every route so callers can compare them.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import oracles
from .algebra import DEFAULT_ORDER, TruncSeries, UniPoly, one_minus_x_pow
from .combinat import s_eulerian_counts
from .errors import SizeError
from .expansions import stirling2_via_tableaux
from .grammars import andre_grammars, dumont_eulerian
from .report import CheckReport, check_equal
from .tableaux import G, lambda_factorial, syt_all

X = UniPoly.x()
ONE = UniPoly((1,))


def _need(n: int, least: int) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def _need_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def _unknown(method: str, table: dict) -> ValueError:
    return ValueError(f"unknown method {method!r}; choose from {sorted(table)}")


def _syt_sum(n: int, weight: Callable, two_columns: bool = False) -> UniPoly:
    """``sum_T G_T * weight(T) * x^{n+1-l(lambda(T))}`` over SYT(n)."""
    counts: dict[int, int] = {}
    for t in syt_all(n):
        if two_columns and t.shape[0] > 2:
            continue
        d = n + 1 - len(t.shape)
        counts[d] = counts.get(d, 0) + G(t) * weight(t)
    return UniPoly.from_dict(counts)


def _one(_t) -> int:
    return 1


# ---------------------------------------------------------------------------
# Eulerian polynomials
# ---------------------------------------------------------------------------


def _eulerian_recurrence(n: int) -> UniPoly:
    return UniPoly.from_dict({i: oracles.eulerian_number(n, i) for i in range(1, n + 1)})


def _eulerian_grammar(n: int) -> UniPoly:
    return dumont_eulerian(n).substitute({"y": 1}).to_unipoly("x")


EULERIAN_METHODS: dict[str, Callable[[int], UniPoly]] = {
    "recurrence": _eulerian_recurrence,
    "descents": lambda n: oracles.perm_poly(n, "des_final"),
    "syt": lambda n: _syt_sum(n, _one),
    "grammar": _eulerian_grammar,
}


def eulerian(n: int, method: str = "recurrence") -> UniPoly:
    """``A_n(x)`` with the final index counted as a descent."""
    _need(n, 1)
    if method not in EULERIAN_METHODS:
        raise _unknown(method, EULERIAN_METHODS)
    return EULERIAN_METHODS[method](n)


def eulerian_classic(n: int, method: str = "recurrence") -> UniPoly:
    """Classical descent polynomial; ``eulerian_classic(0) = 1``."""
    _need(n, 0)
    if n == 0:
        return ONE
    if method == "descents":
        return oracles.perm_poly(n, "des_classic")
    return UniPoly(eulerian(n, method).coeffs[1:])


# ---------------------------------------------------------------------------
# Second-order and 1/k-Eulerian polynomials
# ---------------------------------------------------------------------------


def _second_order_recurrence(n: int, k: int) -> UniPoly:
    one_minus_x = UniPoly((1, -1))
    C = ONE
    for m in range(n):
        C = (k * m + 1) * X * C + X * one_minus_x * C.derivative()
    return C


def _require_k2(k: int, method: str) -> None:
    if k != 2:
        raise ValueError(f"method {method!r} is only available for k = 2")


def _second_order_syt(n: int, k: int) -> UniPoly:
    _require_k2(k, "syt")
    return _syt_sum(n, lambda_factorial)


SECOND_ORDER_METHODS: dict[str, Callable[[int, int], UniPoly]] = {
    "recurrence": _second_order_recurrence,
    "descents": lambda n, k: oracles.stirling_poly(n, k, "des") if n else ONE,
    "syt": _second_order_syt,
}


def second_order(n: int, k: int = 2, method: str = "recurrence") -> UniPoly:
    """``C_n(x; k)``: descents over k-Stirling permutations."""
    _need(n, 0)
    _need_k(k)
    if method not in SECOND_ORDER_METHODS:
        raise _unknown(method, SECOND_ORDER_METHODS)
    if method == "syt" and n == 0:
        return ONE
    return SECOND_ORDER_METHODS[method](n, k)


def _one_over_k_recurrence(n: int, k: int) -> UniPoly:
    one_minus_x = UniPoly((1, -1))
    A = ONE
    for m in range(1, n):
        A = (1 + k * m * X) * A + k * X * one_minus_x * A.derivative()
    return A


def _one_over_k_s_inversion(n: int, k: int) -> UniPoly:
    if n == 0:
        return ONE
    s = [(i - 1) * k + 1 for i in range(1, n + 1)]
    return UniPoly(s_eulerian_counts(s))


def _one_over_k_ap(n: int, k: int) -> UniPoly:
    return oracles.stirling_poly(n, k, "ap") if n else ONE


ONE_OVER_K_METHODS: dict[str, Callable[[int, int], UniPoly]] = {
    "recurrence": _one_over_k_recurrence,
    "exc_cyc": lambda n, k: oracles.exc_cyc_poly(n, k) if n else ONE,
    "ap": _one_over_k_ap,
    "s_inversion": _one_over_k_s_inversion,
}


def one_over_k(n: int, k: int, method: str = "recurrence") -> UniPoly:
    """``A_n^{(k)}(x)``."""
    _need(n, 0)
    _need_k(k)
    if method not in ONE_OVER_K_METHODS:
        raise _unknown(method, ONE_OVER_K_METHODS)
    return ONE_OVER_K_METHODS[method](n, k)


# ---------------------------------------------------------------------------
# Left ascent plateaus and type B
# ---------------------------------------------------------------------------


LAP_METHODS = ("reversal", "lap")


def left_ascent_plateau(n: int, method: str = "reversal") -> UniPoly:
    """``N_n(x)``, either as the reversal ``x^n M_n(1/x)`` or by counting plateaus."""
    _need(n, 0)
    if method == "reversal":
        return one_over_k(n, 2).reversal(n)
    if method == "lap":
        return oracles.stirling_poly(n, 2, "lap") if n else ONE
    raise ValueError(f"unknown method {method!r}; choose from {list(LAP_METHODS)}")


TYPE_B_METHODS = ("convolution", "signed")


def type_b(n: int, method: str = "convolution") -> UniPoly:
    """``B_n(x)``, defined here as ``sum_i C(n,i) N_i M_{n-i}``.

    ``method="signed"`` counts type B descents over signed permutations, a
    cross-check from outside the convolution.
    """
    _need(n, 0)
    if method == "convolution":
        total = UniPoly()
        for i in range(n + 1):
            total = total + comb(n, i) * left_ascent_plateau(i) * one_over_k(n - i, 2)
        return total
    if method == "signed":
        return oracles.type_b_poly(n) if n else ONE
    raise ValueError(f"unknown method {method!r}; choose from {list(TYPE_B_METHODS)}")


def lap_convolution(n: int) -> UniPoly:
    """``sum_i C(n,i) N_i N_{n-i}``, which equals ``2^n A_n(x)``."""
    _need(n, 0)
    total = UniPoly()
    for i in range(n + 1):
        total = total + comb(n, i) * left_ascent_plateau(i) * left_ascent_plateau(n - i)
    return total


# ---------------------------------------------------------------------------
# Andre polynomials
# ---------------------------------------------------------------------------


def _andre_recurrence(n: int) -> UniPoly:
    S = X
    one_minus_2x = UniPoly((1, -2))
    for m in range(2, n + 1):
        S = (m + 1) * X * S + X * one_minus_2x * S.derivative()
    return S


def _andre_grammar(n: int, which: int) -> UniPoly:
    return andre_grammars(n)[which].substitute({"y": 1}).to_unipoly("x")


ANDRE_METHODS: dict[str, Callable[[int], UniPoly]] = {
    "recurrence": _andre_recurrence,
    "simsun": oracles.simsun_poly,
    "trees": oracles.trees012_leaf_poly,
    "grammar1": lambda n: _andre_grammar(n, 0),
    "grammar2": lambda n: _andre_grammar(n, 1),
    "syt": lambda n: _syt_sum(n, _one, two_columns=True),
}


def andre(n: int, method: str = "recurrence") -> UniPoly:
    """``S_n(x)``: descents over simsun permutations, leaves of 0-1-2 increasing trees."""
    _need(n, 1)
    if method not in ANDRE_METHODS:
        raise _unknown(method, ANDRE_METHODS)
    return ANDRE_METHODS[method](n)


def all_routes(family: str, n: int, k: int | None = None) -> dict[str, UniPoly]:
    """Every available construction of one family member, keyed by method."""
    if family == "eulerian":
        return {m: eulerian(n, m) for m in EULERIAN_METHODS}
    if family == "second-order":
        k = 2 if k is None else k
        methods = SECOND_ORDER_METHODS if k == 2 else ("recurrence", "descents")
        return {m: second_order(n, k, m) for m in methods}
    if family == "one-over-k":
        if k is None:
            raise ValueError("one-over-k needs k")
        methods = [m for m in ONE_OVER_K_METHODS if m != "ap" or k == 2]
        return {m: one_over_k(n, k, m) for m in methods}
    if family == "lap":
        return {m: left_ascent_plateau(n, m) for m in LAP_METHODS}
    if family == "type-b":
        return {m: type_b(n, m) for m in TYPE_B_METHODS}
    if family == "andre":
        return {m: andre(n, m) for m in ANDRE_METHODS}
    raise ValueError(f"family {family!r} has no alternative routes")


# ---------------------------------------------------------------------------
# Gamma expansions
# ---------------------------------------------------------------------------


def gamma_vector(p: UniPoly, d: int) -> dict[int, Fraction]:
    """Coefficients ``g_i`` with ``p = sum_i g_i x^i (1+x)^{d-2i}``.

    Raises ``ValueError`` when ``p`` has no such expansion.
    """
    one_plus_x = UniPoly((1, 1))
    rest = p
    out: dict[int, Fraction] = {}
    for i in range(d // 2 + 1):
        g = rest[i]
        if g:
            out[i] = g
            rest = rest - g * UniPoly.monomial(1, i) * one_plus_x ** (d - 2 * i)
    if rest:
        raise ValueError(f"{p} has no gamma expansion of degree {d}")
    return out


def gamma_eulerian(n: int) -> dict[int, int]:
    """``a(n, i)`` read off ``A_n(x) = sum_i a(n,i) x^i (1+x)^{n+1-2i}``."""
    _need(n, 1)
    return {i: int(g) for i, g in gamma_vector(eulerian(n), n + 1).items()}


def gamma_andre(n: int) -> dict[int, int]:
    """``2^{i-1} S(n, i)`` read off ``A_{n+1}(x) = sum_i 2^{i-1} S(n,i) x^i (1+x)^{n+2-2i}``."""
    _need(n, 1)
    return {i: int(g) for i, g in gamma_vector(eulerian(n + 1), n + 2).items()}


def gamma_checks(n: int) -> CheckReport:
    """Both gamma expansions of Eulerian polynomials and the two-column SYT form."""
    _need(n, 1)
    report = CheckReport(f"gamma n={n}")
    one_plus_x = UniPoly((1, 1))
    a = oracles.peak_gamma(n)
    lhs = sum((c * UniPoly.monomial(1, i) * one_plus_x ** (n + 1 - 2 * i) for i, c in a.items()), UniPoly())
    check_equal(report, "peak gamma", lhs, eulerian(n))
    S = andre(n)
    weighted = UniPoly.from_dict({i: 2 ** (i - 1) * int(S[i]) for i in range(1, S.degree + 1)})
    rhs = sum(
        (weighted[i] * UniPoly.monomial(1, i) * one_plus_x ** (n + 2 - 2 * i) for i in range(1, S.degree + 1)),
        UniPoly(),
    )
    check_equal(report, "andre gamma", rhs, eulerian(n + 1))
    two_column = _syt_sum(n, lambda_factorial, two_columns=True)
    check_equal(report, "two-column SYT with lambda!", weighted, two_column)
    return report


def frobenius_check(n: int) -> CheckReport:
    """``A_n(x) = sum_k k! S(n,k) x^k (1-x)^{n-k}``, with ``S(n,k)`` from the triangle and from tableaux."""
    _need(n, 1)
    report = CheckReport(f"frobenius n={n}")
    one_minus_x = UniPoly((1, -1))
    target = eulerian(n)
    for label, s2 in (("stirling triangle", oracles.stirling2), ("k-Young tableaux", stirling2_via_tableaux)):
        total = UniPoly()
        for k in range(1, n + 1):
            total = total + factorial(k) * s2(n, k) * UniPoly.monomial(1, k) * one_minus_x ** (n - k)
        check_equal(report, label, total, target)
    return report


# ---------------------------------------------------------------------------
# Series identities
# ---------------------------------------------------------------------------


def _check_order(n: int, order: int) -> None:
    if order < n + 5:
        raise SizeError(f"truncation order {order} is too small for n={n}; need at least {n + 5}")


def second_order_series(n: int, k: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """``(x (1-x)^{-k} d/dx)^n (1-x)^{-1}`` times ``(1-x)^{n+kn+1}``, modulo ``x^order``."""
    _need(n, 0)
    _need_k(k)
    s = one_minus_x_pow(-1, order + n)
    for _ in range(n):
        d = s.derivative()
        s = d * one_minus_x_pow(-k, d.order).shift(1)
    return s * one_minus_x_pow(n + k * n + 1, order)


def one_over_k_series(n: int, k: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """``(k x d/dx)^n (1-x)^{-1/k}`` times ``(1-x)^{n+1/k}``, modulo ``x^order``."""
    _need(n, 0)
    _need_k(k)
    s = one_minus_x_pow(Fraction(-1, k), order)
    for _ in range(n):
        s = k * s.theta()
    return s * one_minus_x_pow(n + Fraction(1, k), order)


def series_identity_checks(n: int, k: int, order: int = 20) -> CheckReport:
    """Both operator identities for ``C_n(x; k+1)`` and ``A_n^{(k)}``."""
    _need(n, 1)
    _need_k(k)
    _check_order(n, order)
    report = CheckReport(f"series n={n} k={k}")
    expected = TruncSeries.from_poly(second_order(n, k + 1), order)
    check_equal(report, "second-order", second_order_series(n, k, order), expected)
    reversed_ank = one_over_k(n, k).reversal(n)
    check_equal(report, "one-over-k", one_over_k_series(n, k, order), TruncSeries.from_poly(reversed_ank, order))
    return report


def classical_series_checks(n: int, order: int = 20) -> CheckReport:
    """``sum_m m^n x^m (1-x)^{n+1} = A_n(x)`` and ``sum_m S(m+n, m) x^m (1-x)^{2n+1} = C_n(x)``."""
    _need(n, 1)
    _check_order(n, order)
    report = CheckReport(f"classical series n={n}")
    powers = TruncSeries([m**n for m in range(order)], order)
    expected = TruncSeries.from_poly(eulerian(n), order)
    check_equal(report, "power sums", powers * one_minus_x_pow(n + 1, order), expected)
    stirling = TruncSeries([oracles.stirling2(m + n, m) for m in range(order)], order)
    check_equal(
        report,
        "stirling second kind",
        stirling * one_minus_x_pow(2 * n + 1, order),
        TruncSeries.from_poly(second_order(n, 2), order),
    )
    return report


def verify_operator_identities(n: int, k: int, order: int = 20) -> bool:
    return series_identity_checks(n, k, order).ok


def verify_classical_series(n: int, order: int = 20) -> bool:
    return classical_series_checks(n, order).ok


# ---------------------------------------------------------------------------
# Registry and export
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """How the CLI reaches one family: its builder, first index and whether it takes ``k``."""

    build: Callable[..., UniPoly | dict[int, int]]
    offset: int
    needs_k: bool = False
    description: str = ""


def _gamma_as_poly(fn: Callable[[int], dict[int, int]]) -> Callable[[int], UniPoly]:
    return lambda n: UniPoly.from_dict(fn(n))


FAMILIES: dict[str, FamilySpec] = {
    "eulerian": FamilySpec(eulerian, 1, description="A_n(x), final index counted as a descent"),
    "eulerian-classic": FamilySpec(eulerian_classic, 0, description="classical Eulerian polynomial"),
    "second-order": FamilySpec(lambda n, k: second_order(n, k), 0, True, "C_n(x;k), k-Stirling permutation descents"),
    "one-over-k": FamilySpec(lambda n, k: one_over_k(n, k), 0, True, "A_n^(k)(x), 1/k-Eulerian polynomial"),
    "lap": FamilySpec(left_ascent_plateau, 0, description="N_n(x), left ascent plateaus"),
    "type-b": FamilySpec(type_b, 0, description="B_n(x), type B Eulerian polynomial"),
    "andre": FamilySpec(andre, 1, description="S_n(x), Andre polynomial"),
    "gamma-eulerian": FamilySpec(_gamma_as_poly(gamma_eulerian), 1, description="sum_i a(n,i) x^i"),
    "gamma-andre": FamilySpec(_gamma_as_poly(gamma_andre), 1, description="sum_i 2^(i-1) S(n,i) x^i"),
}


def family_poly(family: str, n: int, k: int | None = None) -> UniPoly:
    entry = FAMILIES.get(family)
    if entry is None:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if n < entry.offset:
        raise ValueError(f"{family} starts at n={entry.offset}")
    if entry.needs_k:
        if k is None:
            raise ValueError(f"{family} needs k")
        return entry.build(n, k)
    return entry.build(n)


def _row(p: UniPoly) -> list[int]:
    """Coefficients from the lowest nonzero degree up to the degree."""
    coeffs = p.int_coeffs()
    low = next((i for i, c in enumerate(coeffs) if c), 0)
    return coeffs[low:]


def bfile_lines(family: str, nmax: int, k: int | None = None) -> list[str]:
    """OEIS b-file lines ``i v`` for the flattened coefficient triangle.

    Rows run over ``n = offset..nmax``; each row lists the coefficients from the
    lowest nonzero power of ``x`` upward.  The index ``i`` starts at the
    family's offset.
    """
    start = FAMILIES[family].offset if family in FAMILIES else 0
    lines = []
    i = start
    for n in range(start, nmax + 1):
        for v in _row(family_poly(family, n, k)):
            lines.append(f"{i} {v}")
            i += 1
    return lines
