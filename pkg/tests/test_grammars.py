import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gindex.errors import GrammarSyntaxError
from gindex.grammars import (
    Grammar,
    MPoly,
    andre_grammars,
    derive,
    derive_n,
    dumont_eulerian,
    parse_mpoly,
    random_grammar,
    u_dg_expansion_check,
    u_dg_structural,
)

x, y = MPoly.var("x"), MPoly.var("y")


def test_worked_derivative():
    g = Grammar.parse("x -> x*y; y -> y")
    assert derive(g, x) == x * y
    assert derive_n(g, x, 2) == x * y * y + x * y
    assert derive(g, MPoly.const(7)) == MPoly()


def test_parser_features():
    assert parse_mpoly("2*x^2 - (x + y)**2 + 3") == 2 * x * x - (x + y) * (x + y) + 3
    assert parse_mpoly("-x") == -x
    g = Grammar.parse("x -> y; y -> 1;")
    assert g.rules["y"] == MPoly.const(1)


@pytest.mark.parametrize("text", ["x ->", "x -> y +", "x -> (y", "x -> y; x -> y", "x = y", "x -> y $ 2", ""])
def test_parser_errors(text):
    with pytest.raises(GrammarSyntaxError):
        Grammar.parse(text)


def test_unknown_letters():
    with pytest.raises(ValueError):
        Grammar.parse("x -> z")
    with pytest.raises(ValueError):
        derive(Grammar.parse("x -> x"), MPoly.var("w"))


def test_mpoly_json_round_trip():
    p = parse_mpoly("3*x^2*y - y + 4")
    assert MPoly.from_json(p.to_json()) == p
    assert [2, {"x": 1}] in parse_mpoly("2*x").to_json()


def test_dumont():
    assert dumont_eulerian(1) == x * y
    assert dumont_eulerian(3) == x**3 * y + 4 * x * x * y * y + x * y**3


def test_andre():
    d1, d2 = andre_grammars(3)
    assert d1 == d2 == x * y**3 + 4 * x * x * y
    assert andre_grammars(1)[0] == x * y


def _polys(letters):
    mono = st.tuples(st.integers(-3, 3), st.dictionaries(st.sampled_from(letters), st.integers(0, 2), max_size=2))
    return st.lists(mono, max_size=3).map(lambda ts: sum((MPoly.monomial(c, e) for c, e in ts), MPoly()))


GRAMMARS = [Grammar.parse(t) for t in ("x -> x*y; y -> y", "x -> x*y; y -> x", "x -> y; y -> 1", "x -> x^2 + 3; y -> -x*y")]


@settings(max_examples=60)
@given(st.sampled_from(GRAMMARS), _polys(["x", "y"]), _polys(["x", "y"]))
def test_leibniz_and_linearity(g, p, q):
    assert derive(g, p * q) == derive(g, p) * q + p * derive(g, q)
    assert derive(g, p + 2 * q) == derive(g, p) + 2 * derive(g, q)


def test_u_expansion_named_grammars():
    dumont = Grammar.parse("x -> y; y -> y")
    g2 = Grammar.parse("x -> y; y -> 1")
    for n in range(1, 7):
        assert u_dg_expansion_check(dumont, x, y, n)
        assert u_dg_expansion_check(g2, x, x, n)
    assert u_dg_structural(dumont, x, y, 1) == x * derive(dumont, y)


def test_u_expansion_random_grammars():
    rng = random.Random(7)
    for _ in range(20):
        g = random_grammar(rng)
        assert len(g.alphabet) <= 3
        for n in range(1, 6):
            assert u_dg_expansion_check(g, "x", "x", n)
