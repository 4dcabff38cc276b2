import itertools

import pytest
from hypothesis import given, settings

from conftest import ideals
from edgeideals.closure import (
    Interpretation,
    closure_generators,
    closure_witness,
    forbidden_subgraph_verdict,
    in_newton_polyhedron,
    is_integrally_closed,
    path_weights_closed,
)
from edgeideals.errors import ResourceLimitError
from edgeideals.graph import WeightedGraph, build_cycle, build_path, build_star, edge_ideal
from edgeideals.ideal import MonomialIdeal, parse_ideal
from edgeideals.monomial import VariableContext


def test_membership_examples():
    assert in_newton_polyhedron((1, 1), parse_ideal("(x1^2, x2^2)"))
    assert in_newton_polyhedron((1, 2, 1), parse_ideal("(x1^2*x2^2, x2^2*x3^2)"))
    assert not in_newton_polyhedron((1, 0), parse_ideal("(x1^2)", VariableContext(2)))
    assert not in_newton_polyhedron((5, 5), MonomialIdeal.zero(VariableContext(2)))
    with pytest.raises(ValueError):
        in_newton_polyhedron((1, -1), parse_ideal("(x1^2, x2^2)"))


def test_lp_is_needed_beyond_midpoints():
    # (1,1,1) = (x1^3 + x2^3 + x3^3)/3 averaged; no pair midpoint lies below it
    ideal = parse_ideal("(x1^3, x2^3, x3^3)")
    assert in_newton_polyhedron((1, 1, 1), ideal)
    assert not in_newton_polyhedron((1, 1, 0), ideal)


def test_closure_examples():
    assert not is_integrally_closed(parse_ideal("(x1^2, x2^2)"))
    assert closure_witness(parse_ideal("(x1^2, x2^2)")) == (1, 1)
    assert is_integrally_closed(parse_ideal("(x1^2*x2^2, x2*x3, x3^3*x4^3, x4*x5)"))
    assert closure_witness(parse_ideal("(x1^2*x2^2, x2^2*x3^2)")) == (1, 2, 1)
    assert closure_generators(parse_ideal("(x1^2, x2^2)")) == parse_ideal("(x1^2, x1*x2, x2^2)")
    gens = closure_generators(parse_ideal("(x1^2*x2^2, x2^2*x3^2)"))
    assert gens.contains((1, 2, 1))


def test_squarefree_ideals_are_closed():
    assert is_integrally_closed(edge_ideal(build_cycle([1, 1, 1, 1, 1])))


def test_box_cap():
    with pytest.raises(ResourceLimitError):
        is_integrally_closed(parse_ideal("(x1^50*x2^50*x3^50*x4^50)"), box_cap=1000)


@pytest.mark.parametrize(
    "weights, expected",
    [((2, 2, 1), False), ((2, 1, 2, 1), True), ((2, 1, 1, 2), False), ((2, 1, 3, 1), True), ((3, 1, 1), True)],
)
def test_forbidden_subgraph_paths(weights, expected):
    g = build_path(weights)
    assert forbidden_subgraph_verdict(g, "B").closed is expected
    assert is_integrally_closed(edge_ideal(g)) is expected
    assert path_weights_closed(weights) is expected


def test_readings_differ_on_2k2():
    g = build_path([2, 1, 1, 2])
    assert forbidden_subgraph_verdict(g, Interpretation.A).closed
    verdict = forbidden_subgraph_verdict(g, Interpretation.B)
    assert not verdict.closed and verdict.obstruction == (1, 2, 4, 5)


def test_triangle_and_trivial():
    assert not forbidden_subgraph_verdict(build_cycle([2, 2, 2]), "A").closed
    assert not is_integrally_closed(edge_ideal(build_cycle([2, 2, 2])))
    v = forbidden_subgraph_verdict(build_path([1, 1, 1]), "B")
    assert v.closed and not v.applicable


@given(ideals(max_vars=3, max_gens=4))
@settings(max_examples=40)
def test_closure_properties(ideal):
    closure = closure_generators(ideal)
    assert ideal.is_subset(closure)
    assert closure_generators(closure) == closure
    assert is_integrally_closed(ideal) == (closure == ideal)
    w = closure_witness(ideal)
    if w is not None:
        assert closure.contains(w) and not ideal.contains(w)


@given(ideals(max_vars=3, max_gens=4))
@settings(max_examples=30)
def test_polyhedron_against_powers(ideal):
    # x^a lies in the closure iff x^(ka) lies in I^k for some k
    top = ideal.max_exponents()
    for a in itertools.product(*(range(t + 1) for t in top)):
        witnessed = any(ideal.power(k).contains(tuple(k * x for x in a)) for k in (1, 2, 3, 4))
        if witnessed:
            assert in_newton_polyhedron(a, ideal)


def test_small_weighted_graphs_agree_with_reading_b():
    # every weighting of the paw graph (triangle plus pendant edge)
    edges = [(1, 2), (1, 3), (2, 3), (3, 4)]
    for w in itertools.product((1, 2), repeat=4):
        g = WeightedGraph(4, tuple((u, v, x) for (u, v), x in zip(edges, w)))
        assert forbidden_subgraph_verdict(g, "B").closed == is_integrally_closed(edge_ideal(g))


def test_star_closure():
    # stars with two heavy edges contain a heavy induced P3
    assert not is_integrally_closed(edge_ideal(build_star([2, 2, 1])))
    assert is_integrally_closed(edge_ideal(build_star([3, 1, 1])))
