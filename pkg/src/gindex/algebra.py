"""Exact polynomial, truncated-series and differential-monomial arithmetic.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`, so
nothing here ever rounds.  Three carriers are provided:

* :class:`UniPoly`  -- dense univariate polynomial over Q.
* :class:`TruncSeries` -- power series known up to (excluding) ``x**order``.
* :class:`DiffPolynomial` -- integer combination of monomials
  ``c^a0 c1^a1 ... cm^am * f_k`` where ``c_i = D^i c`` and ``f_k = D^k f``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational
from typing import Union

DEFAULT_ORDER = 24

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"not an exact rational: {v!r}")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense polynomial in ``x`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are never
    stored, so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim([_frac(c) for c in coeffs])

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: Scalar, degree: int) -> UniPoly:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def from_dict(cls, terms: Mapping[int, Scalar]) -> UniPoly:
        if not terms:
            return cls()
        out = [Fraction(0)] * (max(terms) + 1)
        for d, c in terms.items():
            out[d] += _frac(c)
        return cls(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may be a scalar or another poly."""
        acc = 0 * value if not isinstance(value, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def reversal(self, n: int) -> UniPoly:
        """Return ``x**n * p(1/x)``; requires ``deg p <= n``."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds reversal length {n}")
        padded = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UniPoly(reversed(padded))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def low_degree(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __repr__(self) -> str:
        return f"UniPoly({[_fmt_scalar(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: UniPoly, var: str = "x") -> str:
    """Human-readable rendering in ascending powers, e.g. ``x + 4x^2``."""
    parts: list[str] = []
    for d, c in enumerate(p.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if d == 0:
            body = _fmt_scalar(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{_fmt_scalar(mag)}{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class TruncSeries:
    """Power series modulo ``x**order`` with exact rational coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], order: int = DEFAULT_ORDER):
        if order < 1:
            raise ValueError("series order must be positive")
        cs = [_frac(c) for c in coeffs][:order]
        cs += [Fraction(0)] * (order - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: UniPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls(p.coeffs, order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls((1,), order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def _check(self, other: TruncSeries) -> None:
        if other.order != self.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    def _coerce(self, other) -> TruncSeries | None:
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        if isinstance(other, UniPoly):
            return TruncSeries.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return TruncSeries((other,), self.order)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (UniPoly, int, Fraction)):
            return self.coeffs == self._coerce(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncSeries((a + b for a, b in zip(self.coeffs, o.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = self.order
        out = [Fraction(0)] * N
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N - i):
                    b = o.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(out, N)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncSeries:
        if e < 0:
            return series_pow_rational(self, Fraction(e))
        result, base = TruncSeries.one(self.order), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> TruncSeries:
        """d/dx; the result is one order shorter since the top term is lost."""
        if self.order == 1:
            raise ValueError("cannot differentiate an order-1 series")
        return TruncSeries((i * c for i, c in enumerate(self.coeffs) if i), self.order - 1)

    def theta(self) -> TruncSeries:
        """Euler operator x*d/dx, which preserves the truncation order."""
        return TruncSeries((i * c for i, c in enumerate(self.coeffs)), self.order)

    def shift(self, m: int = 1) -> TruncSeries:
        """Multiply by ``x**m``."""
        return TruncSeries([0] * m + list(self.coeffs), self.order)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs, order)

    def to_poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({[_fmt_scalar(c) for c in self.coeffs]}, order={self.order})"

    def __str__(self) -> str:
        return f"{format_poly(self.to_poly())} + O(x^{self.order})"


def series_pow_rational(base: TruncSeries, exponent: Scalar) -> TruncSeries:
    """Return ``base**exponent`` for any rational exponent.

    Uses the recurrence obtained by comparing coefficients in
    ``P' * B = exponent * B' * P``, which needs ``B(0) == 1``.
    """
    if base[0] != 1:
        raise ValueError("series_pow_rational needs constant term 1")
    alpha = _frac(exponent)
    N = base.order
    b = base.coeffs
    p = [Fraction(1)] + [Fraction(0)] * (N - 1)
    for m in range(1, N):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if b[j]:
                acc += (alpha * j - (m - j)) * b[j] * p[m - j]
        p[m] = acc / m
    return TruncSeries(p, N)


def one_minus_x_pow(exponent: Scalar, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series of ``(1 - x)**exponent``."""
    return series_pow_rational(TruncSeries((1, -1), order), exponent)


# ---------------------------------------------------------------------------
# Differential polynomials in c, c1, c2, ... and f_k
# ---------------------------------------------------------------------------

# A monomial key is (c-exponents, f-index): c-exponents is a tuple of
# (derivative order, multiplicity) pairs sorted by order, f-index is None for
# c-only monomials.
CKey = tuple[tuple[int, int], ...]
MonoKey = tuple[CKey, Union[int, None]]


def _ckey(cexp: Mapping[int, int]) -> CKey:
    for i, a in cexp.items():
        if i < 0 or a < 0:
            raise ValueError(f"bad c exponent {i}:{a}")
    return tuple(sorted((i, a) for i, a in cexp.items() if a))


def _cmul(a: CKey, b: CKey) -> CKey:
    merged = dict(a)
    for i, e in b:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


class DiffPolynomial:
    """Sparse integer combination of ``c^a0 c1^a1 ... * f_k`` monomials.

    Instances are immutable; every operation returns a new object with zero
    terms dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[MonoKey, int] | None = None):
        clean: dict[MonoKey, int] = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                clean[key] = clean.get(key, 0) + coeff
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def monomial(cls, coeff: int = 1, c: Mapping[int, int] | None = None, f: int | None = None) -> DiffPolynomial:
        if f is not None and f < 0:
            raise ValueError("negative f index")
        return cls({(_ckey(c or {}), f): coeff})

    @classmethod
    def c(cls, i: int = 0, power: int = 1) -> DiffPolynomial:
        return cls.monomial(1, {i: power})

    @classmethod
    def f(cls, k: int = 0) -> DiffPolynomial:
        return cls.monomial(1, None, k)

    @property
    def terms(self) -> dict[MonoKey, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, dict[int, int], int | None]]:
        """Yield ``(coeff, {order: multiplicity}, f_index)`` in canonical order."""
        for key in sorted(self._terms, key=_sort_key):
            ck, f = key
            yield self._terms[key], dict(ck), f

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return DiffPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> DiffPolynomial:
        return DiffPolynomial({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DiffPolynomial({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        out: dict[MonoKey, int] = {}
        for (ca, fa), va in self._terms.items():
            for (cb, fb), vb in other._terms.items():
                if fa is not None and fb is not None:
                    raise ValueError("product of two f factors is not supported")
                key = (_cmul(ca, cb), fa if fa is not None else fb)
                out[key] = out.get(key, 0) + va * vb
        return DiffPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> DiffPolynomial:
        if e < 0:
            raise ValueError("negative power")
        result = DiffPolynomial.monomial(1)
        for _ in range(e):
            result = result * self
        return result

    def derivative(self) -> DiffPolynomial:
        """Apply D with the Leibniz rule: D c_i = c_{i+1}, D f_k = f_{k+1}."""
        out: dict[MonoKey, int] = {}
        for (ck, f), coeff in self._terms.items():
            exps = dict(ck)
            for i, a in ck:
                new = dict(exps)
                new[i] -= 1
                new[i + 1] = new.get(i + 1, 0) + 1
                key = (_ckey(new), f)
                out[key] = out.get(key, 0) + coeff * a
            if f is not None:
                key = (ck, f + 1)
                out[key] = out.get(key, 0) + coeff
        return DiffPolynomial(out)

    def f_indices(self) -> list[int]:
        return sorted({f for _, f in self._terms if f is not None})

    def slice(self, k: int) -> DiffPolynomial:
        """The c-only coefficient multiplying ``f_k``."""
        return DiffPolynomial({(ck, None): v for (ck, f), v in self._terms.items() if f == k})

    def max_c_order(self) -> int:
        return max((i for ck, _ in self._terms for i, _ in ck), default=-1)

    def coefficient(self, c: Mapping[int, int], f: int | None = None) -> int:
        return self._terms.get((_ckey(c), f), 0)

    # -- rendering ---------------------------------------------------------

    def to_text(self) -> str:
        return _render(self, _mono_text, " + ", "({}) f{}")

    def to_latex(self) -> str:
        return _render(self, _mono_latex, " + ", r"({}) \mathbf{{f}}_{}")

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"DiffPolynomial({self.to_text()})"

    def to_json(self) -> dict:
        """``{"slices": {k: [[coeff, {order: mult}], ...]}}``; key ``"c"`` holds c-only terms."""
        slices: dict[str, list] = {}
        for coeff, cexp, f in self.items():
            name = "c" if f is None else str(f)
            slices.setdefault(name, []).append([coeff, {str(i): a for i, a in sorted(cexp.items())}])
        return {"slices": slices}

    @classmethod
    def from_json(cls, data: Mapping) -> DiffPolynomial:
        terms: dict[MonoKey, int] = {}
        for name, rows in data["slices"].items():
            f = None if name == "c" else int(name)
            for coeff, cexp in rows:
                key = (_ckey({int(i): int(a) for i, a in cexp.items()}), f)
                terms[key] = terms.get(key, 0) + int(coeff)
        return cls(terms)


def _partition_of(ck: CKey) -> tuple[int, ...]:
    return tuple(sorted((i for i, a in ck if i for _ in range(a)), reverse=True))


def _sort_key(key: MonoKey):
    # f groups ascending (c-only first); inside a group by the partition of
    # derivative orders, which is the order the printed table uses.
    ck, f = key
    c0 = dict(ck).get(0, 0)
    return (-1 if f is None else f, _partition_of(ck), c0)


def _mono_text(coeff: int, ck: CKey) -> str:
    factors = [("c" if i == 0 else f"c{i}") + (f"^{a}" if a > 1 else "") for i, a in ck]
    body = " ".join(factors)
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff} {body}"


def _mono_latex(coeff: int, ck: CKey) -> str:
    def factor(i: int, a: int) -> str:
        base = "c" if i == 0 else (f"c_{i}" if i < 10 else f"c_{{{i}}}")
        if a == 1:
            return base
        return base + (f"^{a}" if a < 10 else f"^{{{a}}}")

    body = " ".join(factor(i, a) for i, a in ck)
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}{body}"


def _render(p: DiffPolynomial, mono, joiner: str, group_fmt: str) -> str:
    if not p:
        return "0"
    groups: dict[int | None, list[str]] = {}
    for key in sorted(p._terms, key=_sort_key):
        ck, f = key
        groups.setdefault(f, []).append(mono(p._terms[key], ck))
    chunks = []
    for f, monos in groups.items():
        inner = joiner.join(monos)
        chunks.append(inner if f is None else group_fmt.format(inner, f))
    return " + ".join(chunks)


def diffpoly_apply_cD(p: DiffPolynomial) -> DiffPolynomial:
    """Return ``c * D(p)``."""
    return DiffPolynomial.c(0) * p.derivative()


SeriesLike = Union[TruncSeries, UniPoly, int, Fraction]
Family = Union[Callable[[int], SeriesLike], Mapping[int, SeriesLike]]


def _member(family: Family, idx: int, order: int, what: str) -> TruncSeries:
    try:
        value = family[idx] if isinstance(family, Mapping) else family(idx)
    except (KeyError, IndexError) as exc:
        raise ValueError(f"{what} family has no member {idx}") from exc
    if value is None:
        raise ValueError(f"{what} family has no member {idx}")
    if isinstance(value, TruncSeries):
        if value.order < order:
            raise ValueError(f"{what}_{idx} is truncated at {value.order} < {order}")
        return value.truncate(order)
    if isinstance(value, UniPoly):
        return TruncSeries.from_poly(value, order)
    return TruncSeries((value,), order)


def substitute(p: DiffPolynomial, c_family: Family, f_family: Family, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Evaluate ``p`` after replacing every ``c_i`` and ``f_k`` by a series.

    ``c_family`` and ``f_family`` map a derivative order to a
    :class:`TruncSeries`, :class:`UniPoly` or scalar.  They may be callables or
    mappings; a member that is absent raises ``ValueError``.
    """
    c_cache: dict[int, TruncSeries] = {}
    f_cache: dict[int, TruncSeries] = {}
    total = TruncSeries((), order)
    for (ck, f), coeff in p.terms.items():
        term = TruncSeries((coeff,), order)
        for i, a in ck:
            if i not in c_cache:
                c_cache[i] = _member(c_family, i, order, "c")
            term = term * c_cache[i] ** a
        if f is not None:
            if f not in f_cache:
                f_cache[f] = _member(f_family, f, order, "f")
            term = term * f_cache[f]
        total = total + term
    return total
