"""Variable contexts and exact monomial arithmetic.

A :class:`Monomial` is an exponent vector tied to a :class:`VariableContext`.
All binary operations require both operands to live in the same context.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContextMismatchError, ParseError

# Exponents are bounded like machine-width signed integers.
MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class VariableContext:
    """The variables x1..xn of a polynomial ring."""

    count: int
    names: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"variable count must be a positive integer, got {self.count!r}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(1, self.count + 1)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.count:
            raise ValueError("names must have one entry per variable")
        if len(set(self.names)) != self.count:
            raise ValueError("variable names must be pairwise distinct")

    @classmethod
    def standard(cls, n: int) -> VariableContext:
        return cls(n)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.count)

    def var(self, k: int, d: int = 1) -> Monomial:
        """The monomial x_k^d, with k 1-based."""
        if not 1 <= k <= self.count:
            raise ValueError(f"variable index {k} out of range 1..{self.count}")
        exps = [0] * self.count
        exps[k - 1] = d
        return Monomial(self, tuple(exps))

    def monomial(self, exponents: Iterable[int]) -> Monomial:
        return Monomial(self, tuple(exponents))

    def parse(self, text: str) -> Monomial:
        return parse_monomial(text, self)


@dataclass(frozen=True)
class Monomial:
    ctx: VariableContext
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != self.ctx.count:
            raise ValueError(
                f"exponent vector has length {len(exps)}, context has {self.ctx.count} variables"
            )
        for e in exps:
            if e < 0:
                raise ValueError("exponents must be non-negative")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        object.__setattr__(self, "exponents", exps)

    def _check(self, other: Monomial) -> None:
        if not isinstance(other, Monomial):
            raise TypeError(f"expected Monomial, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError("monomials belong to different variable contexts")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        if any(e > MAX_EXPONENT for e in exps):
            raise OverflowError("exponent overflow in monomial product")
        return Monomial(self.ctx, exps)

    def mul(self, other: Monomial) -> Monomial:
        return self * other

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(self.ctx, tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(self.ctx, tuple(map(min, self.exponents, other.exponents)))

    def quotient(self, other: Monomial) -> Monomial:
        """self : other, i.e. self / gcd(self, other)."""
        self._check(other)
        return Monomial(self.ctx, tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def total_degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __str__(self) -> str:
        return format_exponents(self.exponents, self.ctx.names)

    def __repr__(self) -> str:
        return f"Monomial({self})"


# function forms of the basic operations


def mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return a.gcd(b)


def quotient(a: Monomial, b: Monomial) -> Monomial:
    return a.quotient(b)


def total_degree(a: Monomial) -> int:
    return a.total_degree()


def format_exponents(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")


def _factors(text: str) -> list[tuple[str, int]]:
    text = text.strip()
    if not text:
        raise ParseError("empty monomial")
    if text == "1":
        return []
    out = []
    for chunk in text.split("*"):
        m = _FACTOR.match(chunk)
        if m is None:
            raise ParseError(f"cannot parse factor {chunk!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


def parse_monomial(text: str, ctx: VariableContext) -> Monomial:
    """Parse ``x1^2*x2^2`` style text; ``^1`` may be omitted."""
    exps = [0] * ctx.count
    for name, e in _factors(text):
        exps[ctx.index(name)] += e
    return Monomial(ctx, tuple(exps))


_STD_NAME = re.compile(r"^x(\d+)$")


def infer_count(texts: Iterable[str]) -> int:
    """Smallest n such that every standard name x<k> in ``texts`` has k <= n."""
    n = 0
    for text in texts:
        for name, _ in _factors(text):
            m = _STD_NAME.match(name)
            if m is None:
                raise ParseError(f"cannot infer context from non-standard variable {name!r}")
            n = max(n, int(m.group(1)))
    if n == 0:
        raise ParseError("cannot infer variable count from constant monomials")
    return n
