"""Four independent constructions of ``(cD)^n f`` and the counts ``p_{k,mu}``.

The expansion is written ``(cD)^n f = sum_k A_{n,k} f_k``.  It is built

* by the slice recurrence ``A_{n+1,k} = c A_{n,k-1} + c D A_{n,k}``,
* as a sum of weights ``phi(e)`` over inversion sequences,
* from Comtet's closed sum over sequences ``(k_1, ..., k_{n-1})``,
* from the type counts ``p_{k,mu}`` (themselves computable three ways).
"""

from __future__ import annotations

import json
import threading
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

from .algebra import DiffPolynomial, UniPoly, diffpoly_apply_cD
from .combinat import Partition, TypeKMu, inv_seqs, occurrences, type_of_seq, types_of
from .errors import SizeError
from .oracles import rising_factorial_poly
from .tableaux import G, ktableaux_of

ENUMERATION_CAP = 10


@dataclass(frozen=True)
class Expansion:
    """``(cD)^n f`` as a :class:`DiffPolynomial` in ``c_i`` and ``f_k``."""

    n: int
    body: DiffPolynomial

    def slice(self, k: int) -> DiffPolynomial:
        """``A_{n,k}``."""
        return self.body.slice(k)

    @property
    def slices(self) -> dict[int, DiffPolynomial]:
        return {k: self.slice(k) for k in self.body.f_indices()}

    def is_homogeneous(self) -> bool:
        """Every monomial has total c-degree ``n`` and weight ``sum i*a_i + k = n``."""
        for _, cexp, f in self.body.items():
            if f is None or not 1 <= f <= self.n:
                return False
            if sum(cexp.values()) != self.n:
                return False
            if sum(i * a for i, a in cexp.items()) + f != self.n:
                return False
        return True

    def to_text(self) -> str:
        return self.body.to_text()

    def to_latex(self) -> str:
        return rf"(cD)^{{{self.n}}}f &= {self.body.to_latex()}"

    def to_json(self) -> dict:
        return {"n": self.n, **self.body.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> Expansion:
        return cls(int(data["n"]), DiffPolynomial.from_json(data))

    def __str__(self) -> str:
        return self.to_text()


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def _recurrence_slices(n: int) -> tuple[DiffPolynomial, ...]:
    # entry k-1 holds A_{n,k}
    if n == 1:
        return (DiffPolynomial.c(0),)
    prev = _recurrence_slices(n - 1)
    c = DiffPolynomial.c(0)
    out = []
    for k in range(1, n + 1):
        term = DiffPolynomial()
        if k >= 2:
            term = term + c * prev[k - 2]
        if k <= n - 1:
            term = term + c * prev[k - 1].derivative()
        out.append(term)
    return tuple(out)


def expand_recurrence(n: int) -> Expansion:
    _check_order(n)
    body = DiffPolynomial()
    for k, a in enumerate(_recurrence_slices(n), start=1):
        body = body + a * DiffPolynomial.f(k)
    return Expansion(n, body)


def expand_leibniz(n: int) -> Expansion:
    """Apply ``c D`` to ``f`` ``n`` times with the Leibniz rule."""
    _check_order(n)
    p = DiffPolynomial.f(0)
    for _ in range(n):
        p = diffpoly_apply_cD(p)
    return Expansion(n, p)


def phi(e) -> DiffPolynomial:
    """``c * c_{|e|_1} ... c_{|e|_{n-1}} * f_{|e|_0}``."""
    counts = occurrences(e)
    cexp: dict[int, int] = {0: 1}
    for j in counts[1:]:
        cexp[j] = cexp.get(j, 0) + 1
    return DiffPolynomial.monomial(1, cexp, counts[0])


def expand_inversion(n: int) -> Expansion:
    _check_order(n)
    tally: dict[tuple, int] = {}
    for e in inv_seqs(n):
        counts = occurrences(e)
        key = (tuple(sorted(counts[1:])), counts[0])
        tally[key] = tally.get(key, 0) + 1
    body = DiffPolynomial()
    for (orders, k), mult in tally.items():
        cexp: dict[int, int] = {0: 1}
        for j in orders:
            cexp[j] = cexp.get(j, 0) + 1
        body = body + DiffPolynomial.monomial(mult, cexp, k)
    return Expansion(n, body)


def comtet_sequences(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """``(k_1..k_{n-1})`` with sum ``n-k`` and every prefix sum ``k_1+..+k_j <= j``."""
    target = n - k

    def rec(j: int, used: int, acc: list[int]):
        if j == n:
            if used == target:
                yield tuple(acc)
            return
        for kj in range(0, min(j - used, target - used) + 1):
            acc.append(kj)
            yield from rec(j + 1, used + kj, acc)
            acc.pop()

    yield from rec(1, 0, [])


def comtet_Ank(n: int, k: int) -> DiffPolynomial:
    """``A_{n,k}`` from Comtet's sum.

    Each term is ``c/k! * (2-s_1)(3-s_2)...(n-s_{n-1}) * prod c_{k_j}/k_j!``
    with ``s_j`` the prefix sums; the integer numerator is divided by
    ``k! * prod k_j!`` only at the end, and that division is exact.
    """
    _check_order(n)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    acc: dict[tuple[int, ...], int] = {}
    for ks in comtet_sequences(n, k):
        num = 1
        s = 0
        for j, kj in enumerate(ks, start=1):
            s += kj
            num *= j + 1 - s
        den = factorial(k)
        for kj in ks:
            den *= factorial(kj)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"inexact Comtet term for {ks}")
        key = tuple(sorted(ks))
        acc[key] = acc.get(key, 0) + q
    out = DiffPolynomial()
    for orders, coeff in acc.items():
        cexp: dict[int, int] = {0: 1}
        for j in orders:
            cexp[j] = cexp.get(j, 0) + 1
        out = out + DiffPolynomial.monomial(coeff, cexp)
    return out


def expand_comtet(n: int) -> Expansion:
    body = DiffPolynomial()
    for k in range(1, n + 1):
        body = body + comtet_Ank(n, k) * DiffPolynomial.f(k)
    return Expansion(n, body)


def type_monomial(t: TypeKMu) -> DiffPolynomial:
    """``c * c_{mu_1} ... c_{mu_{n-1}} * f_k`` with the zero slots read as ``c``."""
    cexp: dict[int, int] = {0: 1 + t.mult(0)}
    for part in t.mu:
        cexp[part] = cexp.get(part, 0) + 1
    return DiffPolynomial.monomial(1, cexp, t.k)


def expand_types(n: int, method: str = "recurrence", table: PTable | None = None) -> Expansion:
    _check_order(n)
    body = DiffPolynomial()
    for t in types_of(n):
        body = body + type_monomial(t) * p_value(t, method, table)
    return Expansion(n, body)


# ---------------------------------------------------------------------------
# p_{k,mu}
# ---------------------------------------------------------------------------


def mu_minus(mu: Partition, j: int) -> Partition:
    """Replace the last part equal to ``j`` by ``j - 1`` (zeros dropped)."""
    idx = len(mu) - 1 - mu[::-1].index(j)
    out = list(mu)
    out[idx] -= 1
    return tuple(p for p in out if p)


class PTable:
    """Memo of ``p_{k,mu}`` keyed by ``"k|mu"``; thread-safe insert-if-absent.

    ``n`` is implied by the key since ``n = k + |mu|``.
    """

    SCHEMA = "gindex.ptable/1"

    def __init__(self, values: Mapping[str, int] | None = None):
        self._values: dict[str, int] = dict(values or {})
        self._lock = threading.Lock()

    @staticmethod
    def key(k: int, mu: Partition) -> str:
        return f"{k}|{','.join(map(str, mu))}"

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: str) -> bool:
        return key in self._values

    def get(self, k: int, mu: Partition) -> int:
        if k <= 0:
            return 0
        key = self.key(k, mu)
        hit = self._values.get(key)
        if hit is not None:
            return hit
        value = self._compute(k, mu)
        with self._lock:
            return self._values.setdefault(key, value)

    def _compute(self, k: int, mu: Partition) -> int:
        n = k + sum(mu)
        if k == 1 and all(p == 1 for p in mu) and len(mu) == n - 1:
            return 1
        zeros = n - 1 - len(mu)
        total = self.get(k - 1, mu) if zeros >= 1 else 0
        for j in sorted(set(mu)):
            weight = (zeros if j == 1 else mu.count(j - 1)) + 1
            total += weight * self.get(k, mu_minus(mu, j))
        return total

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def save(self, path: str | Path) -> None:
        with self._lock:
            data = {"schema": self.SCHEMA, "values": dict(sorted(self._values.items()))}
        Path(path).write_text(json.dumps(data, indent=1) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> PTable:
        """Read a cache file; a missing, unreadable or stale-schema file gives an empty table."""
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, ValueError):
            return cls()
        if not isinstance(data, dict) or data.get("schema") != cls.SCHEMA:
            return cls()
        return cls({str(k): int(v) for k, v in data.get("values", {}).items()})


_DEFAULT_TABLE = PTable()


@lru_cache(maxsize=None)
def _enumerated_type_counts(n: int) -> dict[TypeKMu, int]:
    counts: dict[TypeKMu, int] = {}
    for e in inv_seqs(n):
        t = type_of_seq(e)
        counts[t] = counts.get(t, 0) + 1
    return counts


def clear_caches() -> None:
    """Drop memoised expansions, enumeration counts and default-table p values."""
    _recurrence_slices.cache_clear()
    _enumerated_type_counts.cache_clear()
    _DEFAULT_TABLE.clear()


def p_by_recurrence(t: TypeKMu, table: PTable | None = None) -> int:
    return (_DEFAULT_TABLE if table is None else table).get(t.k, t.mu)


def p_by_tableaux(t: TypeKMu) -> int:
    return sum(G(z) for z in ktableaux_of(t))


def p_by_enumeration(t: TypeKMu) -> int:
    if t.n > ENUMERATION_CAP:
        raise SizeError(f"enumeration of I_{t.n} exceeds the cap n <= {ENUMERATION_CAP}")
    return _enumerated_type_counts(t.n).get(t, 0)


P_METHODS: dict[str, Callable[..., int]] = {
    "recurrence": p_by_recurrence,
    "tableau": p_by_tableaux,
    "enumeration": p_by_enumeration,
}


def p_value(t: TypeKMu, method: str = "recurrence", table: PTable | None = None) -> int:
    """``p_{k,mu}``, the number of inversion sequences of type ``t``."""
    if method == "recurrence":
        return p_by_recurrence(t, table)
    try:
        fn = P_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown p method {method!r}") from None
    return fn(t)


# ---------------------------------------------------------------------------
# Aggregates and specialisations
# ---------------------------------------------------------------------------


def a_coefficient(n: int, lam: Partition) -> int:
    """Coefficient of ``c^{n-l(lam)} c_lam f_{n-|lam|}`` in ``(cD)^n f``."""
    lam = tuple(lam)
    if sum(lam) > n - 1:
        raise ValueError(f"|lambda| = {sum(lam)} exceeds n - 1 = {n - 1}")
    cexp: dict[int, int] = {0: n - len(lam)}
    for part in lam:
        cexp[part] = cexp.get(part, 0) + 1
    return expand_recurrence(n).body.coefficient(cexp, n - sum(lam))


def partition_aggregates(n: int) -> dict[str, dict[int, int]]:
    """Three sums of ``a(n, lam)`` read off the expansion.

    ``"all"``: over ``lam`` of size ``n-k``; ``"ones"``: ``a(n, 1^{n-k})``;
    ``"length"``: over all ``lam`` of length ``n-k``.  All keyed by ``k``.
    """
    body = expand_recurrence(n).body
    by_size: dict[int, int] = {}
    ones: dict[int, int] = {}
    by_length: dict[int, int] = {}
    for coeff, cexp, f in body.items():
        parts = {i: a for i, a in cexp.items() if i}
        by_size[f] = by_size.get(f, 0) + coeff
        if set(parts) <= {1}:
            ones[f] = ones.get(f, 0) + coeff
        k = n - sum(parts.values())
        by_length[k] = by_length.get(k, 0) + coeff
    return {"all": by_size, "ones": ones, "length": by_length}


def evaluate_slices(exp: Expansion, c_values: Callable[[int], UniPoly | int | Fraction]) -> dict[int, UniPoly]:
    """Substitute polynomials for every ``c_i`` in each ``A_{n,k}``."""
    cache: dict[int, UniPoly] = {}

    def cval(i: int) -> UniPoly:
        if i not in cache:
            v = c_values(i)
            cache[i] = v if isinstance(v, UniPoly) else UniPoly((v,))
        return cache[i]

    out: dict[int, UniPoly] = {}
    for coeff, cexp, f in exp.body.items():
        term = UniPoly((coeff,))
        for i, a in cexp.items():
            term = term * cval(i) ** a
        out[f] = out.get(f, UniPoly()) + term
    return {k: v for k, v in sorted(out.items()) if v}


def scherk_coefficients(n: int) -> dict[int, UniPoly]:
    """``(xD)^n f``: the slices after ``c = x`` (so ``c_1 = 1`` and ``c_i = 0`` beyond)."""
    x = UniPoly.x()
    return evaluate_slices(expand_recurrence(n), lambda i: x if i == 0 else (1 if i == 1 else 0))


def rising_factorial_check(n: int) -> tuple[UniPoly, UniPoly]:
    """``(sum over k-Young tableaux of G_Z x^k, x(x+1)...(x+n-1))``."""
    _check_order(n)
    counts: dict[int, int] = {}
    for t in types_of(n):
        counts[t.k] = counts.get(t.k, 0) + p_by_tableaux(t)
    return UniPoly.from_dict(counts), rising_factorial_poly(n)


def stirling2_via_tableaux(n: int, k: int) -> int:
    """Sum of ``G_Z`` over k-Young tableaux of shape ``(k, (1^{n-k}))``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return p_by_tableaux(TypeKMu(k, (1,) * (n - k)))


def general_Fn(n: int, alpha, beta, a, b, c) -> UniPoly:
    """``F_{n+1} = (n + n*alpha + beta) q F_n + q (1-x) F_n'`` with ``q = a + bx + cx^2``, ``F_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    alpha, beta = Fraction(alpha), Fraction(beta)
    q = UniPoly((a, b, c))
    one_minus_x = UniPoly((1, -1))
    F = UniPoly((1,))
    for m in range(n):
        F = (m + m * alpha + beta) * q * F + q * one_minus_x * F.derivative()
    return F
