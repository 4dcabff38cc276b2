"""Edge-weighted graphs and their edge ideals.

Vertices are 1-based throughout. A graph never has isolated vertices, so a
vertex count of ``n`` means every vertex 1..n lies on some edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .ideal import MonomialIdeal
from .monomial import VariableContext

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        norm = []
        seen = set()
        for e in self.edges:
            u, v, w = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (1 <= u and v <= self.n):
                raise ValueError(f"edge {{{u},{v}}} outside vertex range 1..{self.n}")
            if w < 1:
                raise ValueError(f"edge {{{u},{v}}} has weight {w} < 1")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))
            norm.append((u, v, w))
        if not norm:
            raise ValueError("a graph needs at least one edge")
        covered = {x for u, v, _ in norm for x in (u, v)}
        if len(covered) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - covered)
            raise ValueError(f"isolated vertices {missing}")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, _, w in self.edges)

    def weight(self, u: int, v: int) -> Optional[int]:
        if u > v:
            u, v = v, u
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        return None

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b, _ in self.edges if v in (a, b)}

    def context(self) -> VariableContext:
        return VariableContext(self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [{"u": u, "v": v, "w": w} for u, v, w in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> WeightedGraph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple((e["u"], e["v"], e.get("w", 1)) for e in data["edges"]))


def build_star(weights: Sequence[int]) -> WeightedGraph:
    """Star on n = len(weights)+1 vertices; leaf i joins the center x_n with weight weights[i-1]."""
    if not weights:
        raise ValueError("a star needs at least one edge weight")
    n = len(weights) + 1
    return WeightedGraph(n, tuple((i, n, w) for i, w in enumerate(weights, start=1)))


def build_path(weights: Sequence[int]) -> WeightedGraph:
    if len(weights) < 1:
        raise ValueError("a path needs at least one edge weight")
    return WeightedGraph(len(weights) + 1, tuple((i, i + 1, w) for i, w in enumerate(weights, start=1)))


def build_cycle(weights: Sequence[int]) -> WeightedGraph:
    if len(weights) < 3:
        raise ValueError("a cycle needs at least three edge weights")
    n = len(weights)
    edges = [(i, i + 1, w) for i, w in enumerate(weights[:-1], start=1)]
    edges.append((1, n, weights[-1]))
    return WeightedGraph(n, tuple(edges))


def build_family(family: str, weights: Sequence[int]) -> WeightedGraph:
    builders = {"path": build_path, "star": build_star, "cycle": build_cycle}
    try:
        return builders[family](list(weights))
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(builders)}") from None


def edge_ideal(g: WeightedGraph, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    ctx = ctx or g.context()
    if ctx.count < g.n:
        raise ValueError("context has fewer variables than the graph has vertices")
    gens = []
    for u, v, w in g.edges:
        e = [0] * ctx.count
        e[u - 1] = w
        e[v - 1] = w
        gens.append(tuple(e))
    ideal = MonomialIdeal(ctx, gens)
    # edges of a simple graph give pairwise incomparable generators
    assert len(ideal) == len(g.edges)
    return ideal


def edge_ideal_without(g: WeightedGraph, removed: Iterable[int], ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    """I(G minus the vertices ``removed``), kept in the ambient ring of G.

    Returns the zero ideal when no edge survives.
    """
    removed = set(removed)
    ctx = ctx or g.context()
    gens = []
    for u, v, w in g.edges:
        if u in removed or v in removed:
            continue
        e = [0] * ctx.count
        e[u - 1] = w
        e[v - 1] = w
        gens.append(tuple(e))
    return MonomialIdeal(ctx, gens)


@dataclass(frozen=True)
class Deletion:
    """Result of deleting vertices: the induced graph on the survivors.

    ``graph`` is None when no edge survives. ``vertex_map[k-1]`` is the
    original label of new vertex k. ``dropped_isolated`` counts survivors
    that became isolated and were removed; each one is a free variable of
    the ambient ring and adds 1 to depth.
    """

    graph: Optional[WeightedGraph]
    vertex_map: tuple[int, ...]
    dropped_isolated: int


def delete_vertices(g: WeightedGraph, removed: Iterable[int]) -> Deletion:
    removed = set(removed)
    if not removed <= set(range(1, g.n + 1)):
        raise ValueError("cannot delete vertices outside the graph")
    if len(removed) == g.n:
        raise ValueError("cannot delete every vertex")
    kept_edges = [(u, v, w) for u, v, w in g.edges if u not in removed and v not in removed]
    survivors = [x for x in range(1, g.n + 1) if x not in removed]
    used = sorted({x for u, v, _ in kept_edges for x in (u, v)})
    dropped = len(survivors) - len(used)
    if not kept_edges:
        return Deletion(None, (), dropped)
    relabel = {old: new for new, old in enumerate(used, start=1)}
    h = WeightedGraph(len(used), tuple((relabel[u], relabel[v], w) for u, v, w in kept_edges))
    return Deletion(h, tuple(used), dropped)


def disjoint_union(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """G1 on vertices 1..n1 followed by G2 shifted to n1+1..n1+n2."""
    shift = g1.n
    return WeightedGraph(
        g1.n + g2.n, g1.edges + tuple((u + shift, v + shift, w) for u, v, w in g2.edges)
    )


def is_nontrivially_weighted(g: WeightedGraph) -> bool:
    return any(w >= 2 for _, _, w in g.edges)
