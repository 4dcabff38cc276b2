"""Polarization: replace x_j^k by a product of k distinct new variables."""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import MonomialIdeal
from .monomial import VariableContext


@dataclass(frozen=True)
class PolarizationMap:
    """How the source variables expand into the polarized ring.

    Source variable j (1-based) becomes the block ``x{j}_1 .. x{j}_{widths[j-1]}``.
    A variable that no generator uses keeps a single target variable so the
    two rings stay comparable for depth; it is marked in ``unused``.
    """

    source: VariableContext
    target: VariableContext
    widths: tuple[int, ...]
    unused: tuple[bool, ...]

    @property
    def added_variables(self) -> int:
        return self.target.count - self.source.count

    def offsets(self) -> tuple[int, ...]:
        out, pos = [], 0
        for w in self.widths:
            out.append(pos)
            pos += w
        return tuple(out)

    def block(self, j: int) -> tuple[str, ...]:
        start = self.offsets()[j - 1]
        return self.target.names[start : start + self.widths[j - 1]]

    def describe(self) -> list[str]:
        lines = []
        for j, name in enumerate(self.source.names, start=1):
            note = "  (unused)" if self.unused[j - 1] else ""
            lines.append(f"{name} -> {', '.join(self.block(j))}{note}")
        return lines

    def to_json(self) -> dict:
        return {
            "source": list(self.source.names),
            "target": list(self.target.names),
            "widths": list(self.widths),
            "unused": list(self.unused),
        }


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return ideal.is_squarefree()


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    if ideal.is_zero():
        raise ValueError("cannot polarize the zero ideal")
    src = ideal.ctx
    top = ideal.max_exponents()
    widths = tuple(max(a, 1) for a in top)
    names = tuple(f"{src.names[j]}_{k}" for j, w in enumerate(widths) for k in range(1, w + 1))
    target = VariableContext(len(names), names)
    pmap = PolarizationMap(src, target, widths, tuple(a == 0 for a in top))

    offsets = pmap.offsets()
    gens = []
    for g in ideal.exponents:
        e = [0] * target.count
        for j, a in enumerate(g):
            for k in range(a):
                e[offsets[j] + k] = 1
        gens.append(tuple(e))
    polarized = MonomialIdeal(target, gens)
    # distinct minimal generators stay incomparable after polarization
    assert len(polarized) == len(ideal)
    return polarized, pmap
