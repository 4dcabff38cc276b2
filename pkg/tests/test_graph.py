import pytest

from edgeideals.betti import ideal_invariants
from edgeideals.graph import (
    WeightedGraph,
    build_cycle,
    build_path,
    build_star,
    delete_vertices,
    disjoint_union,
    edge_ideal,
    edge_ideal_without,
    is_nontrivially_weighted,
)
from edgeideals.ideal import parse_ideal


def test_builders():
    assert build_star([2, 1]).edges == ((1, 3, 2), (2, 3, 1))
    assert build_star([1]).edges == ((1, 2, 1),)
    assert build_star([3, 2, 1]).n == 4
    assert build_path([2, 1, 1, 1]).edges[0] == (1, 2, 2)
    assert build_cycle([1, 1, 1]).edges == ((1, 2, 1), (1, 3, 1), (2, 3, 1))
    with pytest.raises(ValueError):
        build_star([])
    with pytest.raises(ValueError):
        build_cycle([1, 1])


def test_edge_ideals():
    assert edge_ideal(build_star([2, 1])) == parse_ideal("(x1^2*x3^2, x2*x3)")
    assert edge_ideal(build_path([2, 1, 1, 1])) == parse_ideal("(x1^2*x2^2, x2*x3, x3*x4, x4*x5)")
    assert edge_ideal(build_path([1, 1])) == parse_ideal("(x1*x2, x2*x3)")


def test_validation():
    with pytest.raises(ValueError):
        WeightedGraph(3, ((1, 1, 1),))
    with pytest.raises(ValueError):
        WeightedGraph(3, ((1, 2, 1), (2, 1, 3)))
    with pytest.raises(ValueError):
        WeightedGraph(3, ((1, 2, 0),))
    with pytest.raises(ValueError):
        WeightedGraph(4, ((1, 2, 1), (2, 3, 1)))  # x4 isolated


def test_delete_vertices():
    p5 = build_path([2, 1, 1, 1])
    d = delete_vertices(p5, {5})
    assert d.graph == build_path([2, 1, 1]) and d.dropped_isolated == 0
    d = delete_vertices(p5, {4})
    assert d.graph == build_path([2, 1]) and d.dropped_isolated == 1
    d = delete_vertices(build_star([1, 2]), {3})
    assert d.graph is None and d.dropped_isolated == 2
    with pytest.raises(ValueError):
        delete_vertices(p5, range(1, 6))


def test_edge_ideal_without_stays_in_ambient_ring():
    g = build_path([2, 1, 1, 1])
    rest = edge_ideal_without(g, {4})
    assert rest.nvars == 5 and rest == parse_ideal("(x1^2*x2^2, x2*x3)", g.context())
    assert edge_ideal_without(build_star([1, 1]), {3}).is_zero()


@pytest.mark.parametrize("weights", [(1, 2, 1), (3, 1), (2, 2, 2, 1)])
def test_deletion_edge_set_and_degrees(weights):
    g = build_path(weights)
    for v in range(1, g.n + 1):
        kept = {(u, w) for u, w, _ in g.edges if v not in (u, w)}
        survivors = edge_ideal_without(g, {v})
        assert len(survivors) == len(kept)
    ideal = edge_ideal(g)
    assert sorted(ideal.degrees()) == sorted(2 * w for w in weights)


def test_nontrivial_flag():
    assert not is_nontrivially_weighted(build_path([1, 1, 1]))
    assert is_nontrivially_weighted(build_path([2, 1, 1]))
    assert is_nontrivially_weighted(build_star([1, 1, 3]))


def test_json_round_trip():
    g = build_cycle([2, 1, 3])
    assert WeightedGraph.from_json(g.to_json()) == g


@pytest.mark.parametrize("w1, w2", [((2, 1), (1, 1, 1)), ((1, 3, 1), (2,)), ((1, 1), (2, 1, 2))])
def test_disjoint_union_adds_reg_and_depth(w1, w2):
    g1, g2 = build_path(w1), build_path(w2)
    a, b = ideal_invariants(edge_ideal(g1)), ideal_invariants(edge_ideal(g2))
    u = ideal_invariants(edge_ideal(disjoint_union(g1, g2)))
    assert u.reg == a.reg + b.reg
    assert u.depth == a.depth + b.depth
