"""Exact matrix rank over a prime field or over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) when ``characteristic`` is a prime, QQ when it is None."""

    characteristic: Optional[int] = DEFAULT_PRIME

    def __post_init__(self) -> None:
        p = self.characteristic
        if p is not None and not _is_prime(p):
            raise ValueError(f"field characteristic {p} is not prime")
        # products of residues must fit in int64
        if p is not None and p >= 3_037_000_499:
            raise ValueError("prime too large for int64 elimination")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls(None)
        if text.startswith("gf:"):
            return cls(int(text[3:]))
        if text.startswith("gf(") and text.endswith(")"):
            return cls(int(text[3:-1]))
        raise ValueError(f"unknown field {text!r}; use gf:<prime> or rational")

    @property
    def is_rational(self) -> bool:
        return self.characteristic is None

    def __str__(self) -> str:
        return "rational" if self.characteristic is None else f"gf:{self.characteristic}"

    def rank(self, matrix) -> int:
        if self.characteristic is None:
            return rank_rational(matrix)
        return rank_mod_p(matrix, self.characteristic)


GF32003 = FieldSpec(DEFAULT_PRIME)
RATIONALS = FieldSpec(None)


def rank_mod_p(matrix, p: int) -> int:
    a = np.array(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    a %= p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        rest = a[r + 1 :]
        col = rest[:, c]
        hit = np.flatnonzero(col)
        if hit.size:
            rest[hit] = (rest[hit] - np.outer(col[hit], a[r])) % p
        r += 1
    return r


def rank_rational(matrix) -> int:
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(matrix, dtype=object).tolist()]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f / pr[c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        r += 1
        if r == len(rows):
            break
    return r


def sparse_rank(columns, field: FieldSpec) -> int:
    """Rank of a matrix given as a list of sparse columns ``{row: value}``.

    Column reduction with a pivot table keyed by each reduced column's
    largest row index; suited to boundary matrices, which are very sparse.
    """
    p = field.characteristic
    pivots: dict[int, dict] = {}
    for col in columns:
        if p is None:
            c = {r: Fraction(v) for r, v in col.items() if v}
        else:
            c = {r: v % p for r, v in col.items() if v % p}
        while c:
            low = max(c)
            pc = pivots.get(low)
            if pc is None:
                pivots[low] = c
                break
            if p is None:
                f = c[low] / pc[low]
                for r, v in pc.items():
                    nv = c.get(r, 0) - f * v
                    if nv:
                        c[r] = nv
                    else:
                        c.pop(r, None)
            else:
                f = c[low] * pow(pc[low], p - 2, p) % p
                for r, v in pc.items():
                    nv = (c.get(r, 0) - f * v) % p
                    if nv:
                        c[r] = nv
                    else:
                        c.pop(r, None)
    return len(pivots)
