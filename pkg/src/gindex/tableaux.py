"""Standard Young tableaux, k-Young tableaux, the g-index and the map rho.

Rows are stored bottom first (``rows[0]`` is the longest row); columns grow
upward.  A :class:`KTableau` is a bottom row of ``k`` increasing letters
starting at 1, sitting under an ordinary tableau filling of ``mu`` with no
order relation between the two parts.

The g-index follows a restriction rule.  For a letter ``v`` consider the
tableau restricted to letters ``<= v``; ``v`` then sits at a corner in some
column ``j`` (1-based) of the relevant shape ``sh`` (the whole shape for a
standard tableau, the top shape for a k-Young tableau).  With ``sh`` padded
by zeros to ``v`` slots (standard) or ``v - 1`` slots (k-Young),

    g(v) = 1 + #{slots of sh equal to j - 1}.

Bottom-row letters of a k-Young tableau have ``g(v) = 1``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import prod

from .combinat import Partition, TypeKMu, factorial_product, is_partition, partitions_of, types_of


def _shape_of(rows: Sequence[Sequence[int]]) -> Partition:
    return tuple(len(r) for r in rows if r)


def _check_filling(rows: Sequence[Sequence[int]]) -> None:
    shape = tuple(len(r) for r in rows)
    if not is_partition(shape):
        raise ValueError(f"row lengths {shape} do not form a partition")
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            raise ValueError(f"row {list(r)} is not increasing")
    for lower, upper in zip(rows, rows[1:]):
        if any(upper[j] <= lower[j] for j in range(len(upper))):
            raise ValueError("columns must increase upward")


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau; ``rows[0]`` is the bottom row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        _check_filling(rows)
        letters = sorted(v for r in rows for v in r)
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError("a standard tableau must use each of 1..n once")

    @property
    def shape(self) -> Partition:
        return _shape_of(self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def position(self, v: int) -> tuple[int, int]:
        """0-based ``(row, column)`` of letter ``v``."""
        for i, r in enumerate(self.rows):
            if v in r:
                return i, r.index(v)
        raise KeyError(v)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(width)]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> Tableau:
        return cls(tuple(tuple(r) for r in data["rows"]))

    def __str__(self) -> str:
        return render_rows(self.rows)


@dataclass(frozen=True)
class KTableau:
    """A k-Young tableau: ``bottom`` row plus a ``top`` filling of ``mu``."""

    bottom: tuple[int, ...]
    top: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        bottom = tuple(self.bottom)
        top = tuple(tuple(r) for r in self.top if len(r))
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)
        if not bottom or bottom[0] != 1:
            raise ValueError("the bottom row must start with 1")
        if any(a >= b for a, b in zip(bottom, bottom[1:])):
            raise ValueError("the bottom row must be increasing")
        _check_filling(top)
        letters = sorted(list(bottom) + [v for r in top for v in r])
        if letters != list(range(1, len(letters) + 1)):
            raise ValueError("a k-Young tableau must use each of 1..n once")

    @property
    def k(self) -> int:
        return len(self.bottom)

    @property
    def mu(self) -> Partition:
        return _shape_of(self.top)

    @property
    def type(self) -> TypeKMu:
        return TypeKMu(self.k, self.mu)

    @property
    def n(self) -> int:
        return self.k + sum(self.mu)

    def columns(self) -> list[tuple[int, ...]]:
        """Letter sets of each column, the bottom box included."""
        width = max(self.k, len(self.top[0]) if self.top else 0)
        cols = []
        for j in range(width):
            col = [self.bottom[j]] if j < self.k else []
            col += [r[j] for r in self.top if len(r) > j]
            cols.append(tuple(col))
        return cols

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "bottom": list(self.bottom),
            "shape": list(self.mu),
            "rows": [list(r) for r in self.top],
        }

    @classmethod
    def from_json(cls, data) -> KTableau:
        return cls(tuple(data["bottom"]), tuple(tuple(r) for r in data["rows"]))

    def __str__(self) -> str:
        width = len(str(self.n))
        top = render_rows(self.top, width) if self.top else ""
        bottom = " ".join(str(v).rjust(width) for v in self.bottom)
        rule = "-" * max(len(bottom), max((len(line) for line in top.splitlines()), default=0))
        return "\n".join(part for part in (top, rule, bottom) if part)


def render_rows(rows: Sequence[Sequence[int]], width: int | None = None) -> str:
    """Draw rows bottom-up, so the first row is printed last."""
    if width is None:
        width = max((len(str(v)) for r in rows for v in r), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in reversed(rows))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _fillings(shape: Partition, letters: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Standard fillings of ``shape`` by the increasing ``letters``."""
    rows: list[list[int]] = [[] for _ in shape]

    def place(idx: int):
        if idx == len(letters):
            yield tuple(tuple(r) for r in rows)
            return
        for i, length in enumerate(shape):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(letters[idx])
                yield from place(idx + 1)
                rows[i].pop()

    yield from place(0)


def _reading_word(rows) -> tuple[int, ...]:
    return tuple(v for r in rows for v in r)


def syt_of_shape(shape: Sequence[int]) -> list[Tableau]:
    """All standard tableaux of ``shape``, ordered by row-reading word."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape!r} is not a partition")
    n = sum(shape)
    fills = sorted(_fillings(shape, range(1, n + 1)), key=_reading_word)
    return [Tableau(f) for f in fills]


def syt_all(n: int) -> Iterator[Tableau]:
    """Every tableau of size ``n``: shapes reverse-lex, fillings by reading word."""
    for lam in partitions_of(n):
        yield from syt_of_shape(lam)


def ktableaux_of(t: TypeKMu) -> list[KTableau]:
    """All k-Young tableaux of shape ``(k, mu)``, ordered by bottom row then top."""
    n, k = t.n, t.k
    out = []
    for rest in itertools.combinations(range(2, n + 1), k - 1):
        bottom = (1,) + rest
        used = set(bottom)
        letters = [v for v in range(1, n + 1) if v not in used]
        for top in sorted(_fillings(t.mu, letters), key=_reading_word):
            out.append(KTableau(bottom, top))
    return out


def ktableaux_all(n: int) -> Iterator[KTableau]:
    for t in types_of(n):
        yield from ktableaux_of(t)


def restrict(t: Tableau | KTableau, v: int):
    """Keep only the letters ``<= v``."""
    if v < 1 or v > t.n:
        raise ValueError(f"letter {v} outside 1..{t.n}")
    if isinstance(t, KTableau):
        return KTableau(
            tuple(x for x in t.bottom if x <= v),
            tuple(tuple(x for x in r if x <= v) for r in t.top),
        )
    return Tableau(tuple(tuple(x for x in r if x <= v) for r in t.rows))


# ---------------------------------------------------------------------------
# g-index
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GIndexVector:
    """Per-letter g values; ``values[v - 1]`` is ``g(v)``."""

    values: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        if v < 1:
            raise IndexError(v)
        return self.values[v - 1]

    @property
    def G(self) -> int:
        return prod(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class GStep:
    """Debug record: the restricted shape seen when ``letter`` is added."""

    letter: int
    shape: Partition | None  # None for a bottom-row letter
    column: int | None
    slots: int
    g: int


def _g_steps(where: dict[int, int | None], n: int, slot_offset: int) -> list[GStep]:
    # where[v] is the row index of v in the growing diagram, or None if v
    # lies outside it (bottom row of a k-Young tableau).
    lengths: list[int] = []
    steps = []
    for v in range(1, n + 1):
        row = where[v]
        if row is None:
            steps.append(GStep(v, None, None, v - slot_offset, 1))
            continue
        while len(lengths) <= row:
            lengths.append(0)
        lengths[row] += 1
        j = lengths[row]
        slots = v - slot_offset
        nonzero = [length for length in lengths if length]
        if j == 1:
            extra = slots - len(nonzero)
        else:
            extra = nonzero.count(j - 1)
        steps.append(GStep(v, tuple(nonzero), j, slots, 1 + extra))
    return steps


def g_trace(t: Tableau | KTableau) -> list[GStep]:
    """Per-letter restricted shapes and g values."""
    if isinstance(t, KTableau):
        where: dict[int, int | None] = {v: None for v in t.bottom}
        for i, r in enumerate(t.top):
            for v in r:
                where[v] = i
        return _g_steps(where, t.n, 1)
    where = {v: i for i, r in enumerate(t.rows) for v in r}
    return _g_steps(where, t.n, 0)


def g_index(t: Tableau) -> GIndexVector:
    if not isinstance(t, Tableau):
        raise TypeError("g_index expects a Tableau; use g_index_k for k-Young tableaux")
    return GIndexVector(tuple(s.g for s in g_trace(t)))


def g_index_k(z: KTableau) -> GIndexVector:
    if not isinstance(z, KTableau):
        raise TypeError("g_index_k expects a KTableau")
    return GIndexVector(tuple(s.g for s in g_trace(z)))


def G(t: Tableau | KTableau) -> int:
    """Product of the g-index over all letters."""
    return prod(s.g for s in g_trace(t))


def lambda_factorial(t: Tableau) -> int:
    return factorial_product(t.shape)


# ---------------------------------------------------------------------------
# rho and its fibers
# ---------------------------------------------------------------------------


def rho(z: KTableau) -> Tableau:
    """Sort each column of ``z`` (bottom box included) into a standard tableau."""
    cols = [sorted(c) for c in z.columns()]
    height = max(len(c) for c in cols)
    rows = tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height))
    return Tableau(rows)


def _top_from_columns(cols: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...] | None:
    lengths = [len(c) for c in cols]
    while lengths and lengths[-1] == 0:
        lengths.pop()
    if any(a < b for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
        return None
    height = lengths[0] if lengths else 0
    rows = tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height))
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            return None
    return rows


def rho_fiber(t: Tableau) -> list[KTableau]:
    """All k-Young tableaux (over every type) mapped to ``t`` by :func:`rho`.

    Brute force: pick ``k`` and one letter of each of the first ``k`` columns
    for the bottom row, keep the remaining letters as sorted top columns, and
    retain the choices that give a valid k-Young tableau.
    """
    cols = t.columns()
    fiber = []
    for k in range(1, len(cols) + 1):
        for picks in itertools.product(*cols[:k]):
            if picks[0] != 1 or any(a >= b for a, b in zip(picks, picks[1:])):
                continue
            top_cols = [tuple(x for x in c if x != picks[j]) if j < k else c for j, c in enumerate(cols)]
            top = _top_from_columns(top_cols)
            if top is None:
                continue
            z = KTableau(tuple(picks), top)
            if rho(z) == t:
                fiber.append(z)
    return fiber


def gamma_class(z: KTableau) -> int:
    """Which of the four fiber classes ``z`` belongs to, based on the letter ``n``.

    1: ``n`` on top in a row of length ``k + 1``;  2: ``n`` ends the bottom row
    and ``k - 1`` is a (positive) part of ``mu``;  3 and 4: the remaining top
    and bottom cases.
    """
    n = z.n
    if z.bottom[-1] == n:
        return 2 if z.k >= 2 and (z.k - 1) in z.mu else 4
    beta = next(len(r) for r in z.top if n in r)
    return 1 if z.k == beta - 1 else 3


def gamma_decompose_fiber(t: Tableau) -> dict[int, list[KTableau]]:
    parts: dict[int, list[KTableau]] = {1: [], 2: [], 3: [], 4: []}
    for z in rho_fiber(t):
        parts[gamma_class(z)].append(z)
    return parts


def gamma_pairing(t: Tableau) -> list[tuple[KTableau, KTableau]]:
    """Pair each class-1 element with the class-2 element sharing its restriction to ``n - 1``.

    Raises ``ValueError`` when the match is not one-to-one.
    """
    parts = gamma_decompose_fiber(t)
    n = t.n
    by_restriction: dict[KTableau, KTableau] = {}
    for z2 in parts[2]:
        key = restrict(z2, n - 1)
        if key in by_restriction:
            raise ValueError(f"two class-2 elements share restriction {key}")
        by_restriction[key] = z2
    pairs = []
    for z1 in parts[1]:
        key = restrict(z1, n - 1)
        if key not in by_restriction:
            raise ValueError(f"class-1 element without partner:\n{z1}")
        pairs.append((z1, by_restriction.pop(key)))
    if by_restriction:
        raise ValueError("unpaired class-2 elements remain")
    return pairs
