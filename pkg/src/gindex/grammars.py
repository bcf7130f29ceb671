"""Context-free grammars in Chen's sense and their formal derivatives.

A grammar assigns to each letter a polynomial in the letters; ``D_G`` is the
unique derivation extending that assignment.  Grammars can be written in a
small text language::

    grammar := rule (";" rule)* [";"]
    rule    := LETTER "->" expr
    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | atom [("^" | "**") INT]
    atom    := INT | LETTER | "(" expr ")"
    LETTER  := [A-Za-z][A-Za-z0-9_]*

for example ``"x -> x*y; y -> x"``.
"""

from __future__ import annotations

import random
import re
import sys
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .algebra import UniPoly
from .combinat import types_of
from .errors import GrammarSyntaxError
from .expansions import p_by_tableaux

Exponents = tuple[tuple[str, int], ...]


def _mono(exps: Mapping[str, int]) -> Exponents:
    return tuple(sorted((sys.intern(x), e) for x, e in exps.items() if e))


def _mono_mul(a: Exponents, b: Exponents) -> Exponents:
    merged = dict(a)
    for x, e in b:
        merged[x] = merged.get(x, 0) + e
    return _mono(merged)


class MPoly:
    """Multivariate polynomial with integer coefficients over named letters."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                key = _mono(dict(mono))
                clean[key] = clean.get(key, 0) + coeff
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def const(cls, c: int) -> MPoly:
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, coeff: int, exps: Mapping[str, int]) -> MPoly:
        return cls({_mono(exps): coeff})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def letters(self) -> set[str]:
        return {x for mono in self._terms for x, _ in mono}

    def is_const(self) -> bool:
        return all(not mono for mono in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _coerce(other) -> MPoly | None:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly({m: -c for m, c in self._terms.items()})

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
        out: dict[Exponents, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in o._terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = MPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute(self, values: Mapping[str, MPoly | int]) -> MPoly:
        out = MPoly()
        for mono, coeff in self._terms.items():
            term = MPoly.const(coeff)
            for x, e in mono:
                v = values.get(x)
                term = term * (MPoly.var(x) ** e if v is None else self._coerce(v) ** e)
            out = out + term
        return out

    def to_unipoly(self, var: str) -> UniPoly:
        """Read off a polynomial in the single letter ``var``."""
        extra = self.letters() - {var}
        if extra:
            raise ValueError(f"letters {sorted(extra)} remain besides {var!r}")
        return UniPoly.from_dict({dict(m).get(var, 0): c for m, c in self._terms.items()})

    def coefficient(self, exps: Mapping[str, int]) -> int:
        return self._terms.get(_mono(exps), 0)

    def to_json(self) -> list:
        return [[c, dict(m)] for m, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> MPoly:
        return cls({_mono({str(x): int(e) for x, e in exps.items()}): int(c) for c, exps in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, c in sorted(self._terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0])):
            body = "*".join(x if e == 1 else f"{x}^{e}" for x, e in mono)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            chunks.append(("-" if c < 0 else "+", text))
        out = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>->|\*\*|[-+*^();]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise GrammarSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, value: str | None = None, kind: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise GrammarSyntaxError(f"unexpected end of input, expected {value or kind}")
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            raise GrammarSyntaxError(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok[1]

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] == value

    def grammar(self) -> dict[str, MPoly]:
        rules: dict[str, MPoly] = {}
        while self.peek() is not None:
            name = self.take(kind="name")
            self.take("->")
            if name in rules:
                raise GrammarSyntaxError(f"letter {name!r} has two rules")
            rules[name] = self.expr()
            if self.peek() is None:
                break
            self.take(";")
        if not rules:
            raise GrammarSyntaxError("empty grammar")
        return rules

    def expr(self) -> MPoly:
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MPoly:
        value = self.factor()
        while self.at("*"):
            self.take("*")
            value = value * self.factor()
        return value

    def factor(self) -> MPoly:
        if self.at("-"):
            self.take("-")
            return -self.factor()
        base = self.atom()
        if self.at("^") or self.at("**"):
            self.take()
            base = base ** int(self.take(kind="int"))
        return base

    def atom(self) -> MPoly:
        tok = self.peek()
        if tok is None:
            raise GrammarSyntaxError("unexpected end of input in expression")
        kind, value = tok
        if kind == "int":
            self.i += 1
            return MPoly.const(int(value))
        if kind == "name":
            self.i += 1
            return MPoly.var(value)
        if value == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        raise GrammarSyntaxError(f"unexpected token {value!r}")


def parse_mpoly(text: str) -> MPoly:
    p = _Parser(text)
    value = p.expr()
    if p.peek() is not None:
        raise GrammarSyntaxError(f"trailing input at {p.peek()[1]!r}")
    return value


# ---------------------------------------------------------------------------
# Grammars
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Grammar:
    rules: Mapping[str, MPoly]
    alphabet: frozenset[str] = field(default=frozenset())

    def __post_init__(self):
        rules = {sys.intern(x): (MPoly.const(r) if isinstance(r, int) else r) for x, r in self.rules.items()}
        alphabet = frozenset(self.alphabet) | frozenset(rules)
        for x, r in rules.items():
            unknown = r.letters() - alphabet
            if unknown:
                raise ValueError(f"rule for {x!r} uses letters outside the alphabet: {sorted(unknown)}")
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def parse(cls, text: str) -> Grammar:
        return cls(_Parser(text).grammar())

    def derive(self, p: MPoly) -> MPoly:
        return derive(self, p)

    def __str__(self) -> str:
        return "; ".join(f"{x} -> {self.rules.get(x, MPoly())}" for x in sorted(self.alphabet))


def derive(g: Grammar, p: MPoly) -> MPoly:
    """``D_G(p)`` by linearity and the product rule."""
    unknown = p.letters() - g.alphabet
    if unknown:
        raise ValueError(f"letters {sorted(unknown)} are not in the grammar's alphabet")
    out: dict[Exponents, int] = {}
    for mono, coeff in p.terms.items():
        exps = dict(mono)
        for x, e in mono:
            rule = g.rules.get(x)
            if rule is None or not rule:
                continue
            rest = dict(exps)
            rest[x] -= 1
            rest_key = _mono(rest)
            for rm, rc in rule.terms.items():
                m = _mono_mul(rest_key, rm)
                out[m] = out.get(m, 0) + coeff * e * rc
    return MPoly(out)


def derive_n(g: Grammar, p: MPoly, n: int) -> MPoly:
    for _ in range(n):
        p = derive(g, p)
    return p


def u_derive_n(g: Grammar, u: MPoly, p: MPoly, n: int) -> MPoly:
    """``(u D_G)^n (p)``."""
    for _ in range(n):
        p = u * derive(g, p)
    return p


DUMONT = "x -> y; y -> y"
ANDRE_G1 = "x -> x*y; y -> x"
ANDRE_G2 = "x -> y; y -> 1"


def dumont_eulerian(n: int) -> MPoly:
    """``(x D_G)^n (y)`` for ``G = {x -> y, y -> y}``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return u_derive_n(Grammar.parse(DUMONT), MPoly.var("x"), MPoly.var("y"), n)


def andre_grammars(n: int) -> tuple[MPoly, MPoly]:
    """``(D_{G1}^n (x), (x D_{G2})^n (x))``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    x = MPoly.var("x")
    return derive_n(Grammar.parse(ANDRE_G1), x, n), u_derive_n(Grammar.parse(ANDRE_G2), x, x, n)


U_EXPANSION_CAP = 8


def u_dg_structural(g: Grammar, u: MPoly, target: MPoly, n: int) -> MPoly:
    """``sum over types (k, mu) of (sum_Z G_Z) * u * u_{mu_1} ... u_{mu_{n-1}} * D_G^k(target)``.

    Here ``u_i = D_G^i(u)`` and each zero slot of ``mu`` contributes ``u_0 = u``.
    """
    if not 1 <= n <= U_EXPANSION_CAP:
        raise ValueError(f"n must lie in 1..{U_EXPANSION_CAP}")
    u_der = [u]
    for _ in range(n):
        u_der.append(derive(g, u_der[-1]))
    t_der = [target]
    for _ in range(n):
        t_der.append(derive(g, t_der[-1]))
    total = MPoly()
    for t in types_of(n):
        weight = p_by_tableaux(t)
        term = u * u_der[0] ** t.mult(0) * t_der[t.k]
        for part in t.mu:
            term = term * u_der[part]
        total = total + term * weight
    return total


def u_dg_expansion_check(g: Grammar, u: MPoly | str, target: MPoly | str, n: int) -> bool:
    """Compare the tableau-weighted expansion with ``n`` direct applications of ``u D_G``."""
    if isinstance(u, str):
        u = parse_mpoly(u)
    if isinstance(target, str):
        target = parse_mpoly(target)
    return u_dg_structural(g, u, target, n) == u_derive_n(g, u, target, n)


def random_grammar(rng: random.Random, max_letters: int = 3, max_degree: int = 2, max_coeff: int = 3) -> Grammar:
    """A random grammar on at most ``max_letters`` letters with small rules."""
    letters = ["x", "y", "z"][: rng.randint(1, max_letters)]
    rules = {}
    for x in letters:
        rule = MPoly()
        for _ in range(rng.randint(1, 3)):
            exps: dict[str, int] = {}
            for _ in range(rng.randint(0, max_degree)):
                v = rng.choice(letters)
                exps[v] = exps.get(v, 0) + 1
            rule = rule + MPoly.monomial(rng.randint(1, max_coeff), exps)
        rules[x] = rule
    return Grammar(rules)
