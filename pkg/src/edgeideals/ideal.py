"""Monomial ideals stored by their canonical minimal generating set."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence, Union

from .errors import ContextMismatchError, ParseError, UnitIdealError
from .monomial import (
    MAX_EXPONENT,
    Monomial,
    VariableContext,
    format_exponents,
    infer_count,
    parse_monomial,
)

Exps = tuple[int, ...]


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _canonical_order(gens: Iterable[Exps]) -> tuple[Exps, ...]:
    # graded lex, x1 > x2 > ..., largest first
    return tuple(sorted(gens, key=lambda e: (sum(e), e), reverse=True))


def minimal_exponents(gens: Iterable[Sequence[int]]) -> tuple[Exps, ...]:
    """Divisibility-minimal elements of ``gens``, deduplicated and canonically sorted."""
    uniq = sorted({tuple(g) for g in gens}, key=lambda e: (sum(e), e))
    kept: list[Exps] = []
    for g in uniq:
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return _canonical_order(kept)


class MonomialIdeal:
    """A monomial ideal in the ring described by ``ctx``.

    The generator list is always the unique minimal generating set in
    graded-lex order, so equality of ideals is equality of generator lists.
    An empty generator list is the zero ideal; the unit ideal is rejected.
    """

    __slots__ = ("ctx", "_gens")

    def __init__(self, ctx: VariableContext, gens: Iterable[Union[Monomial, Sequence[int]]] = ()):
        exps = []
        for g in gens:
            if isinstance(g, Monomial):
                if g.ctx != ctx:
                    raise ContextMismatchError("generator from a different variable context")
                exps.append(g.exponents)
            else:
                e = tuple(int(x) for x in g)
                if len(e) != ctx.count or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e!r} for {ctx.count} variables")
                exps.append(e)
        self.ctx = ctx
        self._gens = minimal_exponents(exps)
        self._check_proper()

    @classmethod
    def _from_canonical(cls, ctx: VariableContext, gens: tuple[Exps, ...]) -> MonomialIdeal:
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._gens = gens
        obj._check_proper()
        return obj

    @classmethod
    def _from_raw(cls, ctx: VariableContext, gens: Iterable[Exps]) -> MonomialIdeal:
        return cls._from_canonical(ctx, minimal_exponents(gens))

    @classmethod
    def zero(cls, ctx: VariableContext) -> MonomialIdeal:
        return cls._from_canonical(ctx, ())

    @classmethod
    def principal(cls, m: Monomial) -> MonomialIdeal:
        return cls(m.ctx, [m])

    def _check_proper(self) -> None:
        for g in self._gens:
            if not any(g):
                raise UnitIdealError("the unit ideal is outside the model")
            if max(g) > MAX_EXPONENT:
                raise OverflowError("exponent overflow")

    # -- accessors -------------------------------------------------------

    @property
    def exponents(self) -> tuple[Exps, ...]:
        return self._gens

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ctx, g) for g in self._gens)

    @property
    def nvars(self) -> int:
        return self.ctx.count

    def __len__(self) -> int:
        return len(self._gens)

    def is_zero(self) -> bool:
        return not self._gens

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self._gens for e in g)

    def max_exponents(self) -> Exps:
        if not self._gens:
            return (0,) * self.ctx.count
        return tuple(map(max, *self._gens)) if len(self._gens) > 1 else self._gens[0]

    def degrees(self) -> list[int]:
        return [sum(g) for g in self._gens]

    def _check_ctx(self, other_ctx: VariableContext) -> None:
        if other_ctx != self.ctx:
            raise ContextMismatchError("operands belong to different variable contexts")

    def _as_exps(self, m: Union[Monomial, Sequence[int]]) -> Exps:
        if isinstance(m, Monomial):
            self._check_ctx(m.ctx)
            return m.exponents
        e = tuple(m)
        if len(e) != self.ctx.count:
            raise ContextMismatchError("exponent vector length does not match the context")
        return e

    # -- membership and operations ---------------------------------------

    def contains(self, m: Union[Monomial, Sequence[int]]) -> bool:
        e = self._as_exps(m)
        return any(_divides(g, e) for g in self._gens)

    __contains__ = contains

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_ctx(other.ctx)
        return MonomialIdeal._from_raw(self.ctx, self._gens + other._gens)

    def sum(self, other: MonomialIdeal) -> MonomialIdeal:
        return self + other

    def add_generators(self, *ms: Monomial) -> MonomialIdeal:
        """The ideal (I, m1, m2, ...)."""
        return MonomialIdeal._from_raw(self.ctx, self._gens + tuple(self._as_exps(m) for m in ms))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_ctx(other.ctx)
        return MonomialIdeal._from_raw(
            self.ctx,
            (tuple(a + b for a, b in zip(g, h)) for g in self._gens for h in other._gens),
        )

    def product(self, other: MonomialIdeal) -> MonomialIdeal:
        return self * other

    def power(self, t: int) -> MonomialIdeal:
        if not isinstance(t, int) or t < 1:
            raise ValueError("power exponent must be a positive integer")
        if t == 1 or not self._gens:
            return self
        n = self.ctx.count
        prods = []
        for combo in combinations_with_replacement(self._gens, t):
            prods.append(tuple(sum(g[i] for g in combo) for i in range(n)))
        return MonomialIdeal._from_raw(self.ctx, prods)

    def __pow__(self, t: int) -> MonomialIdeal:
        return self.power(t)

    def colon_monomial(self, m: Union[Monomial, Sequence[int]]) -> MonomialIdeal:
        e = self._as_exps(m)
        return MonomialIdeal._from_raw(
            self.ctx, (tuple(max(a - b, 0) for a, b in zip(g, e)) for g in self._gens)
        )

    def colon_ideal(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_ctx(other.ctx)
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        result = None
        for g in other._gens:
            part = self.colon_monomial(g)
            result = part if result is None else result.intersect(part)
        return result

    def colon(self, other: Union[Monomial, MonomialIdeal]) -> MonomialIdeal:
        if isinstance(other, MonomialIdeal):
            return self.colon_ideal(other)
        return self.colon_monomial(other)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_ctx(other.ctx)
        return MonomialIdeal._from_raw(
            self.ctx, (tuple(map(max, g, h)) for g in self._gens for h in other._gens)
        )

    __and__ = intersect

    def restrict_to(self, divisible_by: int) -> tuple[MonomialIdeal, MonomialIdeal]:
        """Split generators into those divisible by x_k (k 1-based) and the rest."""
        k = divisible_by - 1
        inside = tuple(g for g in self._gens if g[k] > 0)
        outside = tuple(g for g in self._gens if g[k] == 0)
        return (
            MonomialIdeal._from_canonical(self.ctx, inside),
            MonomialIdeal._from_canonical(self.ctx, outside),
        )

    def is_subset(self, other: MonomialIdeal) -> bool:
        self._check_ctx(other.ctx)
        return all(other.contains(g) for g in self._gens)

    def equals(self, other: MonomialIdeal) -> bool:
        return self == other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self.ctx, self._gens))

    # -- text / json -----------------------------------------------------

    def __str__(self) -> str:
        if not self._gens:
            return "(0)"
        return "(" + ", ".join(format_exponents(g, self.ctx.names) for g in self._gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"

    def to_json(self) -> list[list[int]]:
        return [list(g) for g in self._gens]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]], ctx: VariableContext | None = None) -> MonomialIdeal:
        data = [list(g) for g in data]
        if ctx is None:
            if not data:
                raise ParseError("cannot infer the context of an empty generator list")
            ctx = VariableContext(len(data[0]))
        return cls(ctx, data)

    def canonical_key(self) -> str:
        """A stable text key: variable count plus the generator list."""
        return f"{self.ctx.count}:" + ";".join(",".join(map(str, g)) for g in self._gens)


def minimalize(gens: Sequence[Monomial], ctx: VariableContext | None = None) -> MonomialIdeal:
    if not gens:
        if ctx is None:
            raise ValueError("a context is needed to build the zero ideal")
        return MonomialIdeal.zero(ctx)
    ctx = ctx or gens[0].ctx
    return MonomialIdeal(ctx, gens)


def parse_ideal(text: str, ctx: VariableContext | None = None) -> MonomialIdeal:
    """Parse ``(x1^2*x2^2, x2*x3)``; the parentheses are optional."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",") if p.strip()]
    if parts == ["0"]:
        parts = []
    if ctx is None:
        ctx = VariableContext(infer_count(parts))
    return MonomialIdeal(ctx, [parse_monomial(p, ctx) for p in parts])


# function forms


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a + b


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a * b


def power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    return ideal.power(t)


def colon_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return ideal.colon_monomial(m)


def colon_ideal(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    return ideal.colon_ideal(other)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a.intersect(b)


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    return a == b
