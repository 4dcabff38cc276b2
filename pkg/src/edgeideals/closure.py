"""Integral closure of monomial ideals.

x^a lies in the integral closure of I iff a lies in the Newton polyhedron
conv(exponents of G(I)) + R^n_{>=0}. Membership is decided exactly: it is
equivalent to max sum(lam) subject to G^T lam <= a, lam >= 0 being at least
1, which is solved with a rational simplex method.

Every minimal generator of the closure, and every closure witness, lies in
the box 0 <= a <= M with M the componentwise maximum of the generators:
lowering a coordinate above M_j to M_j keeps a in the polyhedron (every
generator has j-th entry <= M_j) and keeps x^a outside I.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .errors import ResourceLimitError
from .graph import WeightedGraph, is_nontrivially_weighted
from .ideal import MonomialIdeal

Exps = tuple[int, ...]

DEFAULT_BOX_CAP = 2_000_000
SEPARATOR_RANGE = 4


def _lp_max_weight(gens: Sequence[Exps], a: Exps, stop_at: Optional[Fraction] = None) -> Fraction:
    """max sum(lam) s.t. sum_g lam_g * g <= a, lam >= 0, by Bland-rule simplex.

    Returns early once the objective reaches ``stop_at``.
    """
    n, m = len(a), len(gens)
    # tableau rows: [coeffs for m lambdas | n slacks | rhs]
    rows = []
    for j in range(n):
        row = [Fraction(g[j]) for g in gens] + [Fraction(int(k == j)) for k in range(n)] + [Fraction(a[j])]
        rows.append(row)
    cost = [Fraction(-1)] * m + [Fraction(0)] * n + [Fraction(0)]
    basis = [m + j for j in range(n)]
    width = m + n
    while True:
        if stop_at is not None and cost[-1] >= stop_at:
            return cost[-1]
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            return cost[-1]
        best = None
        for r, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise ArithmeticError("unbounded Newton-polyhedron LP; is a generator the unit monomial?")
        r = best[1]
        prow = rows[r]
        piv = prow[enter]
        prow = [x / piv for x in prow]
        rows[r] = prow
        for i, row in enumerate(rows):
            if i != r and row[enter]:
                f = row[enter]
                rows[i] = [x - f * y for x, y in zip(row, prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow)]
        basis[r] = enter


def _in_polyhedron(gens: Sequence[Exps], a: Exps) -> bool:
    # cheap exact certificates first: a generator or a midpoint of two below a
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            return True
    twice = [2 * y for y in a]
    for g, h in combinations(gens, 2):
        if all(x + z <= y for x, z, y in zip(g, h, twice)):
            return True
    return _lp_max_weight(gens, a, stop_at=Fraction(1)) >= 1


def in_newton_polyhedron(a: Sequence[int], ideal: MonomialIdeal) -> bool:
    a = tuple(int(x) for x in a)
    if len(a) != ideal.nvars:
        raise ValueError("point has the wrong length")
    if any(x < 0 for x in a):
        raise ValueError("point must be non-negative")
    if ideal.is_zero():
        return False
    return _in_polyhedron(ideal.exponents, a)


@lru_cache(maxsize=None)
def _separators(n: int) -> np.ndarray:
    # non-zero vectors in {0..3}^n, used as candidate facet normals
    c = np.indices((SEPARATOR_RANGE,) * n, dtype=np.int64).reshape(n, -1).T
    return c[c.any(axis=1)]


def _screen(gens: Sequence[Exps], points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact batch certificates for polyhedron membership.

    inside[k]: some pair of generators has midpoint below points[k].
    outside[k]: some integer c >= 0 has c.a < min_g c.g, a separating
    halfspace. Points flagged by neither need the LP.
    """
    g = np.array(gens, dtype=np.int64)
    twice = 2 * points
    i, j = np.triu_indices(len(g))
    mids = g[i] + g[j]
    inside = np.zeros(len(points), dtype=bool)
    for start in range(0, len(mids), 256):
        block = mids[start : start + 256]
        inside |= (block[None, :, :] <= twice[:, None, :]).all(axis=2).any(axis=1)
    outside = np.zeros(len(points), dtype=bool)
    n = points.shape[1]
    if SEPARATOR_RANGE**n <= 1 << 16:
        c = _separators(n)
        floor = (c @ g.T).min(axis=1)
        outside = ((c @ points.T) < floor[:, None]).any(axis=0)
    return inside, outside & ~inside


def _box_grid(ideal: MonomialIdeal, cap: int) -> tuple[np.ndarray, tuple[int, ...]]:
    top = ideal.max_exponents()
    shape = tuple(t + 1 for t in top)
    size = 1
    for s in shape:
        size *= s
    if size > cap:
        raise ResourceLimitError(f"box of {size} points exceeds the cap of {cap}")
    grid = np.indices(shape, dtype=np.int32).reshape(len(shape), -1).T
    return grid, shape


def _membership(grid: np.ndarray, ideal: MonomialIdeal) -> np.ndarray:
    inside = np.zeros(len(grid), dtype=bool)
    for g in ideal.exponents:
        inside |= (grid >= np.array(g, dtype=np.int32)).all(axis=1)
    return inside


def _maximal_nonmembers(ideal: MonomialIdeal, cap: int) -> list[Exps]:
    grid, shape = _box_grid(ideal, cap)
    inside = _membership(grid, ideal).reshape(shape)
    maximal = ~inside
    for axis in range(len(shape)):
        up = np.ones_like(inside)
        src = [slice(None)] * len(shape)
        dst = [slice(None)] * len(shape)
        src[axis] = slice(1, None)
        dst[axis] = slice(0, -1)
        up[tuple(dst)] = inside[tuple(src)]
        maximal &= up
    return [tuple(int(x) for x in row) for row in np.argwhere(maximal)]


def _descend(gens: Sequence[Exps], a: Exps) -> Exps:
    """Greedily lower coordinates of a polyhedron point while staying inside."""
    a = list(a)
    changed = True
    while changed:
        changed = False
        for j in range(len(a)):
            while a[j] > 0:
                a[j] -= 1
                if _in_polyhedron(gens, tuple(a)):
                    changed = True
                else:
                    a[j] += 1
                    break
    return tuple(a)


def _maximal_witness(ideal: MonomialIdeal, box_cap: int) -> Optional[Exps]:
    if ideal.is_zero():
        return None
    gens = ideal.exponents
    # a polyhedron point outside I lies below some maximal non-member of the
    # box, which is then itself a witness
    cands = _maximal_nonmembers(ideal, box_cap)
    if not cands:
        return None
    inside, outside = _screen(gens, np.array(cands, dtype=np.int64))
    for a, yes in zip(cands, inside):
        if yes:
            return a
    for a, yes, no in zip(cands, inside, outside):
        if not no and _lp_max_weight(gens, a, stop_at=Fraction(1)) >= 1:
            return a
    return None


def closure_witness(ideal: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP) -> Optional[Exps]:
    """An exponent vector in the closure but not in I, or None when I is integrally closed.

    The returned witness is minimal: lowering any coordinate leaves the closure.
    """
    a = _maximal_witness(ideal, box_cap)
    return None if a is None else _descend(ideal.exponents, a)


def is_integrally_closed(ideal: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP) -> bool:
    return _maximal_witness(ideal, box_cap) is None


def closure_generators(ideal: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP) -> MonomialIdeal:
    if ideal.is_zero():
        return ideal
    gens = ideal.exponents
    grid, _ = _box_grid(ideal, box_cap)
    inside = _membership(grid, ideal)
    candidates = sorted((tuple(int(x) for x in row) for row in grid[~inside]), key=lambda e: (sum(e), e))
    found: list[Exps] = []
    for a in candidates:
        if any(all(x <= y for x, y in zip(f, a)) for f in found):
            continue
        if _in_polyhedron(gens, a):
            found.append(a)
    return MonomialIdeal(ideal.ctx, list(gens) + found)


# -- forbidden induced subgraphs ---------------------------------------------


class Interpretation(str, Enum):
    """Readings of the forbidden configurations for weighted graphs.

    A: induced 3-vertex path with both weights >= 2, two disjoint such
       paths, induced triangle with all weights >= 2.
    B: everything in A plus an induced pair of disjoint edges (2K2) whose
       weights are both >= 2.
    """

    A = "A"
    B = "B"


@dataclass(frozen=True)
class ForbiddenVerdict:
    closed: bool
    applicable: bool
    reason: str
    obstruction: tuple[int, ...] = ()


def _heavy_edges(g: WeightedGraph, vertices: Sequence[int]) -> tuple[list[tuple[int, int, int]], bool]:
    vs = set(vertices)
    induced = [(u, v, w) for u, v, w in g.edges if u in vs and v in vs]
    return induced, all(w >= 2 for _, _, w in induced)


def _find_obstruction(g: WeightedGraph, interpretation: Interpretation) -> Optional[tuple[str, tuple[int, ...]]]:
    verts = range(1, g.n + 1)
    for trio in combinations(verts, 3):
        induced, heavy = _heavy_edges(g, trio)
        if heavy and len(induced) == 2:
            return "induced path on three vertices with non-trivial weights", trio
        if heavy and len(induced) == 3:
            return "induced triangle with non-trivial weights", trio
    # two disjoint heavy 3-vertex paths always contain the first configuration,
    # so it needs no separate search under either reading
    if interpretation is Interpretation.B:
        for quad in combinations(verts, 4):
            induced, heavy = _heavy_edges(g, quad)
            if heavy and len(induced) == 2:
                (a, b, _), (c, d, _) = induced
                if len({a, b, c, d}) == 4:
                    return "induced pair of disjoint edges with non-trivial weights", quad
    return None


def forbidden_subgraph_verdict(g: WeightedGraph, interpretation: Interpretation | str = Interpretation.B) -> ForbiddenVerdict:
    interpretation = Interpretation(interpretation)
    if not is_nontrivially_weighted(g):
        return ForbiddenVerdict(True, False, "trivially weighted graphs are integrally closed")
    hit = _find_obstruction(g, interpretation)
    if hit is None:
        return ForbiddenVerdict(True, True, "no forbidden induced subgraph")
    reason, verts = hit
    return ForbiddenVerdict(False, True, reason, verts)


def path_weights_closed(weights: Sequence[int]) -> bool:
    """Reading B specialized to paths: at most two heavy edges, and two heavy edges sit exactly two apart."""
    heavy = [i for i, w in enumerate(weights) if w >= 2]
    if len(heavy) <= 1:
        return True
    return len(heavy) == 2 and heavy[1] - heavy[0] == 2
