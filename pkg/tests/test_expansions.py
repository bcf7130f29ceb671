import json

import pytest

from gindex.algebra import DiffPolynomial, UniPoly
from gindex.combinat import TypeKMu, types_of
from gindex.errors import SizeError
from gindex.expansions import (
    Expansion,
    PTable,
    a_coefficient,
    comtet_Ank,
    expand_comtet,
    expand_inversion,
    expand_leibniz,
    expand_recurrence,
    expand_types,
    general_Fn,
    p_by_enumeration,
    p_value,
    partition_aggregates,
    phi,
    rising_factorial_check,
    scherk_coefficients,
    stirling2_via_tableaux,
)
from gindex.families import eulerian, second_order
from gindex.oracles import eulerian_number, stirling1, stirling2

c, c1, c2, c3 = (DiffPolynomial.c(i) for i in range(4))
f = DiffPolynomial.f


def test_small_expansions():
    assert expand_recurrence(1).body == c * f(1)
    assert expand_recurrence(3).body == (c * c1 * c1 + c * c * c2) * f(1) + 3 * c * c * c1 * f(2) + c**3 * f(3)


def test_n5_second_slice():
    assert expand_recurrence(5).slice(2) == 15 * c * c * c1**3 + 30 * c**3 * c1 * c2 + 5 * c**4 * c3


def test_phi_examples():
    assert phi((0, 0, 1, 0, 4, 2, 4, 0, 1)) == c**6 * c1 * c2 * c2 * f(4)
    assert phi((0, 0, 0)) == c**3 * f(3)


def test_comtet_examples():
    assert comtet_Ank(2, 1) == c * c1
    assert comtet_Ank(4, 4) == c**4
    assert comtet_Ank(4, 2) == 7 * c * c * c1 * c1 + 4 * c**3 * c2


@pytest.mark.parametrize("n", range(1, 9))
def test_constructions_agree(n):
    base = expand_recurrence(n)
    assert base.is_homogeneous()
    for other in (expand_leibniz(n), expand_inversion(n), expand_comtet(n), expand_types(n)):
        assert other.body == base.body


def test_slice_relations():
    for n in range(1, 7):
        exp, nxt = expand_recurrence(n), expand_recurrence(n + 1)
        assert exp.slice(n) == c**n
        assert nxt.slice(1) == c * exp.slice(1).derivative()


def test_p_values():
    assert p_value(TypeKMu(2, (1,))) == 3
    assert p_value(TypeKMu(3, (2, 1))) == 120
    assert p_value(TypeKMu(3, (1, 1, 1))) == 90
    assert p_value(TypeKMu(2, (2, 1, 1))) == 146
    assert p_value(TypeKMu(3, (2, 1, 1))) == 896
    assert p_value(TypeKMu(1, (1, 1, 1, 1))) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_p_methods_agree(n):
    for t in types_of(n):
        values = {m: p_value(t, m) for m in ("recurrence", "tableau", "enumeration")}
        assert len(set(values.values())) == 1, (t, values)


def test_enumeration_cap():
    with pytest.raises(SizeError):
        p_by_enumeration(TypeKMu(11, ()))


def test_unknown_p_method():
    with pytest.raises(ValueError):
        p_value(TypeKMu(1, ()), "guess")


def test_ptable_round_trip(tmp_path):
    path = tmp_path / "p.json"
    table = PTable()
    assert table.get(3, (2, 1, 1)) == 896
    table.save(path)
    loaded = PTable.load(path)
    assert PTable.key(3, (2, 1, 1)) in loaded
    assert loaded.get(3, (2, 1, 1)) == 896


def test_ptable_ignores_stale_schema(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"schema": "old", "values": {"2|1": 99}}))
    assert len(PTable.load(path)) == 0
    path.write_text("not json")
    assert len(PTable.load(path)) == 0


def test_a_coefficient_equals_p():
    for n in range(1, 7):
        for t in types_of(n):
            assert a_coefficient(n, t.mu) == p_value(t)


@pytest.mark.parametrize("n", range(1, 10))
def test_partition_aggregates(n):
    agg = partition_aggregates(n)
    ks = range(1, n + 1)
    assert agg["all"] == {k: stirling1(n, k) for k in ks}
    assert agg["ones"] == {k: stirling2(n, k) for k in ks}
    assert agg["length"] == {k: eulerian_number(n, k) for k in ks}


def test_rising_factorial():
    lhs, rhs = rising_factorial_check(4)
    assert lhs == rhs == UniPoly([0, 6, 11, 6, 1])
    lhs, rhs = rising_factorial_check(1)
    assert lhs == rhs == UniPoly([0, 1])


def test_stirling_second_kind_from_tableaux():
    assert stirling2_via_tableaux(4, 2) == 7
    for n in range(1, 9):
        assert stirling2_via_tableaux(n, n) == 1
        for k in range(1, n + 1):
            assert stirling2_via_tableaux(n, k) == stirling2(n, k)


@pytest.mark.parametrize("n", range(1, 11))
def test_scherk(n):
    slices = scherk_coefficients(n)
    assert slices == {k: UniPoly.monomial(stirling2(n, k), k) for k in range(1, n + 1)}


def test_general_fn():
    assert general_Fn(0, 0, 1, 0, 1, 0) == UniPoly([1])
    for n in range(1, 7):
        assert general_Fn(n, 0, 1, 0, 1, 0) == eulerian(n)
        assert general_Fn(n, 1, 1, 0, 1, 0) == second_order(n)


def test_json_round_trip():
    exp = expand_recurrence(6)
    assert Expansion.from_json(json.loads(json.dumps(exp.to_json()))).body == exp.body


def test_bad_order():
    with pytest.raises(ValueError):
        expand_recurrence(0)
