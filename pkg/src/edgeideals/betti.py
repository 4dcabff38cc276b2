"""Multigraded Betti numbers of monomial ideals.

Two independent algorithms:

* upper Koszul: for each element ``a`` of the lcm lattice,
  beta_{i,a}(I) = dim reduced H_{i-1}(K^a(I)), where K^a(I) is the complex of
  squarefree ``b`` with x^(a-b) in I;
* Taylor strand: the Taylor complex tensored with the residue field, split
  by multidegree; beta_{i,a}(S/I) = dim H_i of the strand at ``a``.

Tables are kept in the S/I convention unless stated otherwise.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import ResourceLimitError
from .ideal import MonomialIdeal
from .linalg import GF32003, FieldSpec, sparse_rank

Exps = tuple[int, ...]

DEFAULT_LATTICE_CAP = 50_000
DEFAULT_TAYLOR_CAP = 15


# -- lcm lattice ---------------------------------------------------------------


class _Encoder:
    """Mixed-radix integer codes for exponent vectors bounded by ``top``."""

    def __init__(self, top: Exps):
        radix = [t + 1 for t in top]
        total = 1
        for r in radix:
            total *= r
        if total >= 2**62:
            raise ResourceLimitError("exponent box too large to encode")
        strides = []
        s = 1
        for r in reversed(radix):
            strides.append(s)
            s *= r
        self.strides = np.array(strides[::-1], dtype=np.int64)

    def encode(self, rows: np.ndarray) -> np.ndarray:
        return rows.astype(np.int64) @ self.strides


@dataclass(frozen=True)
class LcmLattice:
    """lcms of nonempty subsets of the minimal generators.

    The bottom element (the lcm of the empty set, the zero vector) is kept
    implicit and is not listed in ``elements``.
    """

    nvars: int
    elements: tuple[Exps, ...]

    @property
    def bottom(self) -> Exps:
        return (0,) * self.nvars

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return tuple(a) in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _lattice_array(gens: np.ndarray, cap: int) -> np.ndarray:
    m, n = gens.shape
    enc = _Encoder(tuple(int(x) for x in gens.max(axis=0)))
    codes = enc.encode(gens)
    _, first = np.unique(codes, return_index=True)
    elements = [gens[np.sort(first)]]
    seen = np.unique(codes)
    frontier = elements[0]
    total = len(frontier)
    while len(frontier):
        joined = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, n)
        jcodes = enc.encode(joined)
        ucodes, idx = np.unique(jcodes, return_index=True)
        fresh = ~np.isin(ucodes, seen, assume_unique=True)
        frontier = joined[idx[fresh]]
        if len(frontier):
            seen = np.union1d(seen, ucodes[fresh])
            elements.append(frontier)
            total += len(frontier)
            if total > cap:
                raise ResourceLimitError(f"lcm lattice exceeds the cap of {cap} elements")
    return np.concatenate(elements, axis=0)


def lcm_lattice(ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    if ideal.is_zero():
        raise ValueError("the zero ideal has no lcm lattice")
    gens = np.array(ideal.exponents, dtype=np.int64)
    arr = _lattice_array(gens, cap)
    elems = sorted((tuple(int(x) for x in row) for row in arr), key=lambda e: (sum(e), e))
    return LcmLattice(ideal.nvars, tuple(elems))


def in_lcm_lattice(ideal: MonomialIdeal, a: Exps) -> bool:
    """``a`` is in the lattice iff it is nonzero and equals the lcm of the generators dividing it."""
    if not any(a):
        return False
    divs = [g for g in ideal.exponents if all(x <= y for x, y in zip(g, a))]
    if not divs:
        return False
    return tuple(map(max, *divs)) == tuple(a) if len(divs) > 1 else divs[0] == tuple(a)


# -- simplicial complexes ------------------------------------------------------


def _submasks(mask: int) -> Iterable[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    ordered = sorted(set(masks), key=lambda x: (-bin(x).count("1"), x))
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are bit sets over ``nvertices`` vertices.

    ``faces`` is downward closed. The void complex has no faces at all and
    differs from the complex {emptyset}.
    """

    nvertices: int
    faces: frozenset[int]

    @classmethod
    def from_facets(cls, nvertices: int, facets: Iterable[int]) -> SimplicialComplex:
        faces: set[int] = set()
        for f in _maximal_masks(facets):
            faces.update(_submasks(f))
        return cls(nvertices, frozenset(faces))

    @classmethod
    def void(cls, nvertices: int) -> SimplicialComplex:
        return cls(nvertices, frozenset())

    def is_void(self) -> bool:
        return not self.faces

    def facets(self) -> tuple[int, ...]:
        return _maximal_masks(self.faces)

    def face_sets(self) -> list[tuple[int, ...]]:
        """Faces as sorted tuples of 1-based vertex labels."""
        out = []
        for f in self.faces:
            out.append(tuple(i + 1 for i in range(self.nvertices) if f >> i & 1))
        return sorted(out, key=lambda s: (len(s), s))


def _reduced_homology_of_faces(faces: Iterable[int], field: FieldSpec) -> list[int]:
    by_size: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_size[bin(f).count("1")].append(f)
    if not by_size:
        return [0]
    top = max(by_size)
    index = {k: {f: i for i, f in enumerate(sorted(by_size[k]))} for k in range(top + 1)}
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        lower = index[k - 1]
        cols = []
        for f in index[k]:
            col = {}
            sign = 1
            bits = f
            while bits:
                low = bits & -bits
                col[lower[f ^ low]] = sign
                sign = -sign
                bits ^= low
            cols.append(col)
        ranks[k] = sparse_rank(cols, field)
    return [len(index[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


@lru_cache(maxsize=200_000)
def _homology_from_facets(facets: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    if len(facets) == 1:
        # a full simplex: acyclic unless it is {emptyset}
        return (1,) if facets[0] == 0 else (0,)
    common = facets[0]
    for f in facets[1:]:
        common &= f
    if common:
        # cone over any common vertex
        return (0,)
    faces: set[int] = set()
    for f in facets:
        faces.update(_submasks(f))
    return tuple(_reduced_homology_of_faces(faces, field))


def reduced_homology_dims(complex_: SimplicialComplex, field: FieldSpec = GF32003) -> list[int]:
    """[dim H~_{-1}, dim H~_0, ...] over ``field``; the void complex gives [0]."""
    if complex_.is_void():
        return [0]
    return _reduced_homology_of_faces(complex_.faces, field)


# -- Betti tables --------------------------------------------------------------


@dataclass(frozen=True)
class Invariants:
    """Invariants of S/I: regularity, projective dimension and depth."""

    reg: int
    pd: int
    depth: int

    @property
    def reg_ideal(self) -> int:
        return self.reg + 1

    @property
    def pd_ideal(self) -> int:
        return self.pd - 1


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Multigraded Betti numbers ``{(i, a): beta}`` with positive entries only.

    ``convention`` is "quotient" for beta(S/I) and "ideal" for beta(I);
    beta_{i,a}(S/I) = beta_{i-1,a}(I) for i >= 1 and beta_{0,0}(S/I) = 1.
    """

    nvars: int
    multigraded: Mapping[tuple[int, Exps], int] = field(hash=False)
    convention: str = "quotient"

    def __post_init__(self) -> None:
        if self.convention not in ("quotient", "ideal"):
            raise ValueError(f"unknown convention {self.convention!r}")
        clean = {(int(i), tuple(int(x) for x in a)): int(b) for (i, a), b in self.multigraded.items() if b}
        object.__setattr__(self, "multigraded", dict(sorted(clean.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))))

    @property
    def coarse(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), b in self.multigraded.items():
            out[(i, sum(a))] += b
        return dict(sorted(out.items()))

    def to_quotient(self) -> BettiTable:
        if self.convention == "quotient":
            return self
        entries = {(i + 1, a): b for (i, a), b in self.multigraded.items()}
        entries[(0, (0,) * self.nvars)] = 1
        return BettiTable(self.nvars, entries, "quotient")

    def to_ideal(self) -> BettiTable:
        if self.convention == "ideal":
            return self
        entries = {(i - 1, a): b for (i, a), b in self.multigraded.items() if i >= 1}
        return BettiTable(self.nvars, entries, "ideal")

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.multigraded.items() if k == i)

    def to_json(self, multigraded: bool = False) -> dict:
        data = {
            "nvars": self.nvars,
            "convention": self.convention,
            "coarse": [[i, j, b] for (i, j), b in self.coarse.items()],
        }
        if multigraded:
            data["multigraded"] = [[i, list(a), b] for (i, a), b in self.multigraded.items()]
        return data

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        if "multigraded" not in data:
            raise ValueError("a BettiTable needs multigraded entries to be restored")
        entries = {(i, tuple(a)): b for i, a, b in data["multigraded"]}
        return cls(data["nvars"], entries, data["convention"])

    def format(self) -> str:
        inv = invariants(self)
        lines = [f"({i}, {j}): {b}" for (i, j), b in self.coarse.items()]
        lines.append(f"reg={inv.reg}, pd={inv.pd}, depth={inv.depth}")
        return "\n".join(lines)


def invariants(table: BettiTable) -> Invariants:
    """reg, pd and depth of S/I (Auslander-Buchsbaum for depth)."""
    q = table.to_quotient()
    coarse = q.coarse
    reg = max(j - i for i, j in coarse)
    pd = max(i for i, _ in coarse)
    return Invariants(reg, pd, q.nvars - pd)


def has_linear_resolution(ideal: MonomialIdeal, table: Optional[BettiTable] = None, field: FieldSpec = GF32003) -> bool:
    """True iff I is generated in one degree d and beta_{i,j}(I) != 0 only for j = i + d."""
    if ideal.is_zero():
        return False
    degs = set(ideal.degrees())
    if len(degs) != 1:
        return False
    d = degs.pop()
    if len(ideal) == 1:
        return True
    table = (table or betti_upper_koszul(ideal, field)).to_ideal()
    return all(j == i + d for i, j in table.coarse)


def _trivial_table(ideal: MonomialIdeal) -> BettiTable:
    return BettiTable(ideal.nvars, {(0, (0,) * ideal.nvars): 1}, "quotient")


def upper_koszul_complex(ideal: MonomialIdeal, a: Exps) -> SimplicialComplex:
    a = tuple(int(x) for x in a)
    if len(a) != ideal.nvars:
        raise ValueError("multidegree has the wrong length")
    if not in_lcm_lattice(ideal, a):
        raise ValueError(f"{a} is not in the lcm lattice; every Betti number there is zero")
    facets = []
    for g in ideal.exponents:
        if all(x <= y for x, y in zip(g, a)):
            facets.append(sum(1 << i for i, (x, y) in enumerate(zip(g, a)) if x < y))
    return SimplicialComplex.from_facets(ideal.nvars, facets)


def betti_upper_koszul(
    ideal: MonomialIdeal,
    field: FieldSpec = GF32003,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    chunk: int = 4096,
) -> BettiTable:
    if ideal.is_zero():
        return _trivial_table(ideal)
    n = ideal.nvars
    gens = np.array(ideal.exponents, dtype=np.int64)
    lattice = _lattice_array(gens, lattice_cap)
    weights = (np.int64(1) << np.arange(n, dtype=np.int64))
    entries: dict[tuple[int, Exps], int] = {(0, (0,) * n): 1}
    memo: dict[tuple[int, ...], tuple[int, ...]] = {}
    for start in range(0, len(lattice), chunk):
        block = lattice[start : start + chunk]
        divides = (gens[None, :, :] <= block[:, None, :]).all(axis=2)
        free = (gens[None, :, :] < block[:, None, :]) @ weights
        for row, dmask, fmask in zip(block, divides, free):
            key = tuple(sorted(set(fmask[dmask].tolist())))
            dims = memo.get(key)
            if dims is None:
                dims = _homology_from_facets(_maximal_masks(key), field)
                memo[key] = dims
            for k, d in enumerate(dims):
                if d:
                    # beta_{k,a}(I) = dim H~_{k-1}, shifted by one for S/I
                    entries[(k + 1, tuple(int(x) for x in row))] = d
    return BettiTable(n, entries, "quotient")


def _subset_lcms(gens: np.ndarray) -> np.ndarray:
    m, n = gens.shape
    lcms = np.zeros((1 << m, n), dtype=np.int64)
    for b in range(m):
        lo, hi = 1 << b, 1 << (b + 1)
        lcms[lo:hi] = np.maximum(lcms[:lo], gens[b])
    return lcms


def betti_taylor_strand(
    ideal: MonomialIdeal, field: FieldSpec = GF32003, gen_cap: int = DEFAULT_TAYLOR_CAP
) -> BettiTable:
    if ideal.is_zero():
        return _trivial_table(ideal)
    m, n = len(ideal), ideal.nvars
    if m > gen_cap:
        raise ResourceLimitError(f"{m} generators exceed the Taylor oracle cap of {gen_cap}")
    gens = np.array(ideal.exponents, dtype=np.int64)
    lcms = _subset_lcms(gens)
    enc = _Encoder(tuple(int(x) for x in gens.max(axis=0)))
    codes = enc.encode(lcms)
    order = np.argsort(codes, kind="stable")
    bounds = np.flatnonzero(np.diff(codes[order])) + 1
    entries: dict[tuple[int, Exps], int] = {}
    for group in np.split(order, bounds):
        a = tuple(int(x) for x in lcms[group[0]])
        members = set(group.tolist())
        by_size: dict[int, list[int]] = defaultdict(list)
        for s in sorted(members):
            by_size[bin(s).count("1")].append(s)
        index = {k: {s: i for i, s in enumerate(v)} for k, v in by_size.items()}
        sizes = sorted(by_size)
        ranks: dict[int, int] = defaultdict(int)
        for k in sizes:
            lower = index.get(k - 1)
            if not lower:
                continue
            cols = []
            for s in by_size[k]:
                col = {}
                sign = 1
                bits = s
                while bits:
                    low = bits & -bits
                    r = lower.get(s ^ low)
                    if r is not None:
                        col[r] = sign
                    sign = -sign
                    bits ^= low
                cols.append(col)
            ranks[k] = sparse_rank(cols, field)
        for k in sizes:
            beta = len(by_size[k]) - ranks[k] - ranks[k + 1]
            if beta:
                entries[(k, a)] = beta
    return BettiTable(n, entries, "quotient")


def hilbert_numerator(ideal: MonomialIdeal) -> dict[Exps, int]:
    """Coefficients of the K-polynomial of S/I by inclusion-exclusion over generator subsets."""
    n = ideal.nvars
    if ideal.is_zero():
        return {(0,) * n: 1}
    gens = np.array(ideal.exponents, dtype=np.int64)
    m = len(gens)
    if m > 20:
        raise ResourceLimitError("inclusion-exclusion over more than 20 generators")
    lcms = _subset_lcms(gens)
    signs = np.array([-1 if bin(s).count("1") % 2 else 1 for s in range(1 << m)], dtype=np.int64)
    out: dict[Exps, int] = defaultdict(int)
    for row, sgn in zip(lcms.tolist(), signs.tolist()):
        out[tuple(row)] += sgn
    return {a: c for a, c in out.items() if c}


def betti_table(
    ideal: MonomialIdeal,
    field: FieldSpec = GF32003,
    method: str = "koszul",
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    taylor_cap: int = DEFAULT_TAYLOR_CAP,
) -> BettiTable:
    if method == "koszul":
        return betti_upper_koszul(ideal, field, lattice_cap)
    if method == "taylor":
        return betti_taylor_strand(ideal, field, taylor_cap)
    raise ValueError(f"unknown method {method!r}")


def ideal_invariants(ideal: MonomialIdeal, field: FieldSpec = GF32003, lattice_cap: int = DEFAULT_LATTICE_CAP) -> Invariants:
    return invariants(betti_upper_koszul(ideal, field, lattice_cap))
