import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ideal_pairs, ideals
from edgeideals.errors import ContextMismatchError, UnitIdealError
from edgeideals.ideal import MonomialIdeal, minimalize, parse_ideal
from edgeideals.monomial import VariableContext, parse_monomial

CTX3 = VariableContext(3)
CTX4 = VariableContext(4)


def I(text, ctx=CTX4):
    return parse_ideal(text, ctx)


def test_minimalize():
    ms = [parse_monomial(t, CTX3) for t in ("x1*x2", "x1*x2^2", "x2*x3")]
    assert minimalize(ms) == I("(x1*x2, x2*x3)", CTX3)
    assert minimalize([], CTX3).is_zero()
    ms = [parse_monomial(t, CTX3) for t in ("x1^2*x2^2", "x2*x3", "x1^2*x2^3*x3")]
    assert minimalize(ms) == I("(x1^2*x2^2, x2*x3)", CTX3)


def test_contains():
    assert I("(x1*x2, x2*x3)").contains(CTX4.monomial((1, 1, 1, 0)))
    assert not I("(x1^2*x2^2, x2^2*x3^2)").contains(CTX4.monomial((1, 2, 1, 0)))
    assert not MonomialIdeal.zero(CTX4).contains(CTX4.var(1))


def test_sum_and_product():
    assert I("x1*x2") + I("x2*x3") == I("(x1*x2, x2*x3)")
    assert I("x1*x2") * I("x2*x3") == I("x1*x2^2*x3")
    assert I("x2") + I("x2*x3") == I("x2")


def test_power_examples():
    p = I("(x1*x2, x2*x3, x3*x4)").power(2)
    assert p == I("(x1^2*x2^2, x1*x2^2*x3, x1*x2*x3*x4, x2^2*x3^2, x2*x3^2*x4, x3^2*x4^2)")
    assert len(p) == 6
    q = I("(x1^2*x3^2, x2*x3)", CTX3).power(2)
    assert q == I("(x1^4*x3^4, x1^2*x2*x3^3, x2^2*x3^2)", CTX3)
    base = I("(x1*x2, x3)")
    assert base.power(1) == base
    with pytest.raises(ValueError):
        base.power(0)


def test_colon_examples():
    assert I("(x1^2*x2^2, x2*x3)", CTX3).colon(CTX3.var(2)) == I("(x1^2*x2, x3)", CTX3)
    assert I("(x1^2*x3^2, x2*x3)", CTX3).colon(CTX3.var(2)) == I("x3", CTX3)
    base = I("(x1*x2, x3^2)")
    assert base.colon(CTX4.one()) == base
    assert I("x1*x2").colon(I("(x1, x2)")) == I("x1*x2")
    with pytest.raises(ValueError):
        base.colon(MonomialIdeal.zero(CTX4))


def test_colon_that_reaches_the_unit_ideal_raises():
    with pytest.raises(UnitIdealError):
        I("x1").colon(CTX4.var(1))


def test_intersect_examples():
    assert I("x1") & I("x2") == I("x1*x2")
    assert I("x1^2*x2^2") & I("(x2*x3, x3*x4)") == I("x1^2*x2^2*x3")
    base = I("(x1*x2, x3)")
    assert base & base == base


def test_equality_and_order():
    assert minimalize([parse_monomial("x1*x2", CTX3), parse_monomial("x1*x2^2", CTX3)]) == I("x1*x2", CTX3)
    assert I("x1") != I("x2")
    # graded lex, largest first
    assert str(I("(x3, x1*x2, x1^2)")) == "(x1^2, x1*x2, x3)"
    assert str(MonomialIdeal.zero(CTX4)) == "(0)"


def test_rejects_unit_and_mixed_contexts():
    with pytest.raises(UnitIdealError):
        MonomialIdeal(CTX3, [(0, 0, 0)])
    with pytest.raises(ContextMismatchError):
        I("x1") + I("x1", CTX3)


def test_json_round_trip_and_key():
    base = I("(x1^2*x2^2, x2*x3)")
    again = MonomialIdeal.from_json(json.loads(json.dumps(base.to_json())))
    assert again == base
    assert base.canonical_key() == "4:2,2,0,0;0,1,1,0"


def test_restrict_to():
    inside, outside = I("(x1*x2, x2*x3, x3*x4)").restrict_to(2)
    assert inside == I("(x1*x2, x2*x3)")
    assert outside == I("x3*x4")


def _box(n, top):
    return itertools.product(range(top + 1), repeat=n)


@given(ideal_pairs())
def test_membership_semantics(data):
    a, b, u = data
    assert (a + b).contains(u) == (a.contains(u) or b.contains(u))
    assert (a & b).contains(u) == (a.contains(u) and b.contains(u))
    # product membership by brute force over divisors of u
    n = len(u)
    in_product = any(
        a.contains(d) and b.contains(tuple(x - y for x, y in zip(u, d)))
        for d in itertools.product(*(range(x + 1) for x in u))
    )
    assert (a * b).contains(u) == in_product


@given(ideal_pairs())
def test_colon_semantics(data):
    a, b, u = data
    for m in b.exponents:
        if a.contains(m):
            continue
        col = a.colon(m)
        for v in _box(a.nvars, 3):
            assert col.contains(v) == a.contains(tuple(x + y for x, y in zip(v, m)))


@given(ideals(max_gens=4), st.integers(1, 2), st.integers(1, 2))
def test_power_laws(ideal, s, t):
    assert ideal.power(s) * ideal.power(t) == ideal.power(s + t)


@given(ideals())
def test_generators_are_an_antichain(ideal):
    gens = ideal.exponents
    for g, h in itertools.permutations(gens, 2):
        assert not all(x <= y for x, y in zip(g, h))
    assert ideal.is_subset(ideal + ideal)
    with pytest.raises(UnitIdealError):
        ideal.colon_ideal(ideal)
