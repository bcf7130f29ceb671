"""Slow, trusted brute-force enumerations used to cross-check everything else.

Nothing here is clever on purpose: permutations are generated with
:func:`itertools.permutations` and statistics are read off by direct scans.
All caps raise :class:`~gindex.errors.SizeError` instead of truncating.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .algebra import UniPoly
from .errors import SizeError

PERM_CAP = 9
STIRLING_PERM_CAP = 14  # k * n
TREE_CAP = 10
SIGNED_PERM_CAP = 7


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what}: n must be non-negative")
    if n > cap:
        raise SizeError(f"{what}: n={n} exceeds the enumeration cap {cap}")


def _poly_from_counts(counts: dict[int, int]) -> UniPoly:
    return UniPoly.from_dict(counts)


# ---------------------------------------------------------------------------
# Permutation statistics
# ---------------------------------------------------------------------------


def des_final(pi: Sequence[int]) -> int:
    """Indices ``i`` with ``pi(i) > pi(i+1)`` or ``i = n``."""
    n = len(pi)
    return sum(1 for i in range(n) if i == n - 1 or pi[i] > pi[i + 1])


def des_classic(pi: Sequence[int]) -> int:
    return sum(1 for a, b in zip(pi, pi[1:]) if a > b)


def exc(pi: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(pi, start=1) if v > i)


def cyc(pi: Sequence[int]) -> int:
    seen = [False] * (len(pi) + 1)
    count = 0
    for start in range(1, len(pi) + 1):
        if not seen[start]:
            count += 1
            v = start
            while not seen[v]:
                seen[v] = True
                v = pi[v - 1]
    return count


def _padded(pi: Sequence[int]) -> list[int]:
    return [0, *pi, 0]


def peaks(pi: Sequence[int]) -> int:
    """Peaks with ``pi(0) = pi(n+1) = 0``."""
    p = _padded(pi)
    return sum(1 for i in range(1, len(pi) + 1) if p[i - 1] < p[i] > p[i + 1])


def exterior_double_descents(pi: Sequence[int]) -> int:
    p = _padded(pi)
    return sum(1 for i in range(1, len(pi) + 1) if p[i - 1] > p[i] > p[i + 1])


def has_double_descent(word: Sequence[int]) -> bool:
    return any(word[i] > word[i + 1] > word[i + 2] for i in range(len(word) - 2))


def is_simsun(pi: Sequence[int]) -> bool:
    """No restriction of ``pi`` to ``[m]`` contains a double descent."""
    for m in range(3, len(pi) + 1):
        if has_double_descent([v for v in pi if v <= m]):
            return False
    return True


def is_alternating(pi: Sequence[int]) -> bool:
    """``pi(1) > pi(2) < pi(3) > ...``."""
    return all((a > b) if i % 2 == 0 else (a < b) for i, (a, b) in enumerate(zip(pi, pi[1:])))


@dataclass(frozen=True)
class PermStats:
    perm: tuple[int, ...]
    des_final: int
    des_classic: int
    exc: int
    cyc: int
    peaks: int
    exterior_double_descents: int
    simsun: bool
    alternating: bool


def perm_stats(pi: Sequence[int]) -> PermStats:
    pi = tuple(pi)
    return PermStats(
        pi,
        des_final(pi),
        des_classic(pi),
        exc(pi),
        cyc(pi),
        peaks(pi),
        exterior_double_descents(pi),
        is_simsun(pi),
        is_alternating(pi),
    )


STATISTICS: dict[str, Callable[[Sequence[int]], int]] = {
    "des_final": des_final,
    "des_classic": des_classic,
    "exc": exc,
    "cyc": cyc,
    "peaks": peaks,
}


def permutations(n: int) -> Iterator[tuple[int, ...]]:
    _check_cap(n, PERM_CAP, "permutations")
    return itertools.permutations(range(1, n + 1))


def perm_poly(n: int, statistic: str | Callable[[Sequence[int]], int]) -> UniPoly:
    """``sum over S_n of x**stat(pi)``."""
    stat = STATISTICS[statistic] if isinstance(statistic, str) else statistic
    counts: dict[int, int] = {}
    for pi in permutations(n):
        s = stat(pi)
        counts[s] = counts.get(s, 0) + 1
    return _poly_from_counts(counts)


def exc_cyc_poly(n: int, k: int) -> UniPoly:
    """``sum over S_n of x**exc(pi) * k**(n - cyc(pi))``."""
    counts: dict[int, int] = {}
    for pi in permutations(n):
        e = exc(pi)
        counts[e] = counts.get(e, 0) + k ** (n - cyc(pi))
    return _poly_from_counts(counts)


def peak_gamma(n: int) -> dict[int, int]:
    """``a(n, i)``: permutations with ``i`` peaks and no exterior double descent."""
    out: dict[int, int] = {}
    for pi in permutations(n):
        if exterior_double_descents(pi) == 0:
            i = peaks(pi)
            out[i] = out.get(i, 0) + 1
    return dict(sorted(out.items()))


def simsun_perms(n: int) -> Iterator[tuple[int, ...]]:
    return (pi for pi in permutations(n) if is_simsun(pi))


def simsun_poly(n: int) -> UniPoly:
    """Descent polynomial (final index counted) of simsun permutations."""
    counts: dict[int, int] = {}
    for pi in simsun_perms(n):
        d = des_final(pi)
        counts[d] = counts.get(d, 0) + 1
    return _poly_from_counts(counts)


def alternating_perms(n: int) -> Iterator[tuple[int, ...]]:
    """Alternating permutations of ``[n]``, generated by backtracking."""
    _check_cap(n, PERM_CAP, "alternating_perms")
    if n == 0:
        yield ()
        return
    word: list[int] = []
    free = set(range(1, n + 1))

    def extend():
        if len(word) == n:
            yield tuple(word)
            return
        pos = len(word)
        for v in sorted(free):
            if pos and ((pos - 1) % 2 == 0) != (word[-1] > v):
                continue
            word.append(v)
            free.remove(v)
            yield from extend()
            free.add(v)
            word.pop()

    yield from extend()


def alternating_count(n: int) -> int:
    return sum(1 for _ in alternating_perms(n))


# ---------------------------------------------------------------------------
# Stirling permutations
# ---------------------------------------------------------------------------


def stirling_perms(n: int, k: int = 2) -> list[tuple[int, ...]]:
    """All k-Stirling permutations of order ``n`` by block insertion."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    if k * n > STIRLING_PERM_CAP:
        raise SizeError(f"stirling_perms: k*n={k * n} exceeds the cap {STIRLING_PERM_CAP}")
    words: list[tuple[int, ...]] = [()]
    for i in range(1, n + 1):
        block = (i,) * k
        words = [w[:g] + block + w[g:] for w in words for g in range(len(w) + 1)]
    return sorted(words)


def is_stirling_perm(word: Sequence[int], k: int) -> bool:
    n = len(word) // k
    if sorted(word) != sorted(list(range(1, n + 1)) * k):
        return False
    for i in range(1, n + 1):
        pos = [p for p, v in enumerate(word) if v == i]
        if any(word[p] < i for p in range(pos[0], pos[-1] + 1)):
            return False
    return True


def stirling_des(word: Sequence[int]) -> int:
    """Descents with the last index always counted."""
    return des_final(word)


def ascent_plateaus(word: Sequence[int], k: int) -> int:
    """Indices ``i`` in ``2..nk-k+1`` with ``w[i-1] < w[i] = ... = w[i+k-1]``."""
    w = (None, *word)  # 1-based
    nk = len(word)
    count = 0
    for i in range(2, nk - k + 2):
        run = w[i : i + k]
        if w[i - 1] < w[i] and all(x == w[i] for x in run):
            count += 1
    return count


def left_ascent_plateaus(word: Sequence[int]) -> int:
    """Indices ``i`` in ``1..2n-1`` with ``w[i-1] < w[i] = w[i+1]`` and ``w[0] = 0``."""
    w = (0, *word)
    return sum(1 for i in range(1, len(word)) if w[i - 1] < w[i] == w[i + 1])


def stirling_poly(n: int, k: int, statistic: str) -> UniPoly:
    """Generating polynomial of ``des``, ``ap`` or ``lap`` over ``Q_n(k)``."""
    if statistic == "des":
        stat = stirling_des
    elif statistic == "ap":
        def stat(w):
            return ascent_plateaus(w, k)
    elif statistic == "lap":
        if k != 2:
            raise ValueError("left ascent plateaus are defined for k = 2")
        stat = left_ascent_plateaus
    else:
        raise ValueError(f"unknown Stirling permutation statistic {statistic!r}")
    counts: dict[int, int] = {}
    for w in stirling_perms(n, k):
        s = stat(w)
        counts[s] = counts.get(s, 0) + 1
    return _poly_from_counts(counts)


# ---------------------------------------------------------------------------
# 0-1-2 increasing trees
# ---------------------------------------------------------------------------


def trees012(n: int) -> Iterator[tuple[int, ...]]:
    """Increasing trees on ``{0..n}`` with at most two children per vertex.

    A tree is encoded by its parent vector: entry ``v - 1`` is the parent of ``v``.
    """
    _check_cap(n, TREE_CAP, "trees012")
    parents: list[int] = []
    children = [0] * (n + 1)

    def grow(v: int):
        if v > n:
            yield tuple(parents)
            return
        for p in range(v):
            if children[p] < 2:
                children[p] += 1
                parents.append(p)
                yield from grow(v + 1)
                parents.pop()
                children[p] -= 1

    yield from grow(1)


def trees012_leaf_poly(n: int) -> UniPoly:
    counts: dict[int, int] = {}
    for parents in trees012(n):
        internal = set(parents)
        leaves = sum(1 for v in range(n + 1) if v not in internal)
        counts[leaves] = counts.get(leaves, 0) + 1
    return _poly_from_counts(counts)


# ---------------------------------------------------------------------------
# Signed permutations (type B), an extra referee
# ---------------------------------------------------------------------------


def signed_perms(n: int) -> Iterator[tuple[int, ...]]:
    _check_cap(n, SIGNED_PERM_CAP, "signed_perms")
    for pi in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, pi))


def des_b(pi: Sequence[int]) -> int:
    """Type-B descents: ``i`` in ``0..n-1`` with ``pi(i) > pi(i+1)``, ``pi(0) = 0``."""
    w = (0, *pi)
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def type_b_poly(n: int) -> UniPoly:
    counts: dict[int, int] = {}
    for pi in signed_perms(n):
        d = des_b(pi)
        counts[d] = counts.get(d, 0) + 1
    return _poly_from_counts(counts)


# ---------------------------------------------------------------------------
# Classical number triangles
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind."""
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@lru_cache(maxsize=None)
def eulerian_number(n: int, i: int) -> int:
    """Permutations of ``[n]`` with ``i`` descents, final index included."""
    if n == 0:
        return 1 if i == 0 else 0
    if i < 1 or i > n:
        return 0
    if n == 1:
        return 1
    return i * eulerian_number(n - 1, i) + (n + 1 - i) * eulerian_number(n - 1, i - 1)


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def rising_factorial_poly(n: int) -> UniPoly:
    """``x (x+1) ... (x+n-1)``."""
    p = UniPoly((1,))
    for j in range(n):
        p = p * UniPoly((j, 1))
    return p
