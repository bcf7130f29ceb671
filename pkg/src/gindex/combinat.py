"""Partitions, types (k, mu), inversion sequences and the map psi.

Partitions are plain tuples of positive integers in weakly decreasing order
and inversion sequences are tuples ``(e1, ..., en)`` with ``0 <= e_i < i``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def as_partition(parts: Sequence[int]) -> Partition:
    """Sort ``parts`` decreasingly and drop zeros."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts!r}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def factorial_product(parts: Sequence[int]) -> int:
    """``lam! = lam_1! lam_2! ...``."""
    out = 1
    for p in parts:
        out *= factorial(p)
    return out


@dataclass(frozen=True, order=True)
class TypeKMu:
    """A type ``(k, mu)`` of ``n``: ``k`` in ``[n]`` and ``mu`` a partition of ``n-k``.

    ``mu`` is stored without the trailing zeros; it is conceptually padded to
    ``n - 1`` slots and :meth:`mult` counts over those slots.
    """

    k: int
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(self.mu))
        if not is_partition(self.mu):
            raise ValueError(f"mu={self.mu!r} is not a partition")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if len(self.mu) > max(self.n - 1, 0):
            raise ValueError(f"mu={self.mu!r} has more than n-1 parts")

    @property
    def n(self) -> int:
        return self.k + sum(self.mu)

    @property
    def padded(self) -> tuple[int, ...]:
        return self.mu + (0,) * (self.n - 1 - len(self.mu))

    def mult(self, j: int) -> int:
        """``|mu|_j``: how many of the ``n-1`` slots hold the value ``j``."""
        if j == 0:
            return self.n - 1 - len(self.mu)
        return self.mu.count(j)

    def to_json(self) -> dict:
        return {"k": self.k, "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data) -> TypeKMu:
        return cls(int(data["k"]), tuple(int(p) for p in data["mu"]))

    def __str__(self) -> str:
        return f"({self.k}, {self.padded})"


def types_of(n: int) -> Iterator[TypeKMu]:
    """All types of ``n``, ``k`` descending and ``mu`` reverse-lex within each ``k``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for k in range(n, 0, -1):
        for mu in partitions_of(n - k):
            if len(mu) <= n - 1:
                yield TypeKMu(k, mu)


def inv_seqs(n: int) -> Iterator[tuple[int, ...]]:
    """All ``n!`` inversion sequences of length ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return itertools.product(*(range(i) for i in range(1, n + 1)))


def is_inv_seq(e: Sequence[int]) -> bool:
    return all(0 <= x < i for i, x in enumerate(e, start=1))


def occurrences(e: Sequence[int]) -> list[int]:
    """``[|e|_0, |e|_1, ..., |e|_{n-1}]``."""
    counts = [0] * len(e)
    for x in e:
        counts[x] += 1
    return counts


def type_of_seq(e: Sequence[int]) -> TypeKMu:
    if not is_inv_seq(e):
        raise ValueError(f"{tuple(e)!r} is not an inversion sequence")
    counts = occurrences(e)
    return TypeKMu(counts[0], as_partition(counts[1:]))


def psi(pi: Sequence[int]) -> tuple[int, ...]:
    """``e_i = #{j < i : pi(j) > pi(i)}``."""
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(pi)!r} is not a permutation of [n]")
    return tuple(sum(1 for j in range(i) if pi[j] > pi[i]) for i in range(n))


def s_inv_seqs(s: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if any(si < 1 for si in s):
        raise ValueError("s must be positive")
    return itertools.product(*(range(si) for si in s))


def asc_s(e: Sequence[int], s: Sequence[int]) -> int:
    """Ascents of an s-inversion sequence, with ``e_0 = 0`` and ``s_0 = 1`` prepended."""
    if len(e) != len(s) or any(not 0 <= x < si for x, si in zip(e, s)):
        raise ValueError(f"{tuple(e)!r} is not an s-inversion sequence for s={tuple(s)!r}")
    ratios = [Fraction(0)] + [Fraction(x, si) for x, si in zip(e, s)]
    return sum(1 for a, b in zip(ratios, ratios[1:]) if a < b)


def s_eulerian_counts(s: Sequence[int]) -> list[int]:
    """Coefficient list of ``E_n^{(s)}(x)``: entry ``i`` counts sequences with ``i`` ascents."""
    counts = [0] * (len(s) + 1)
    for e in s_inv_seqs(s):
        counts[asc_s(e, s)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts
