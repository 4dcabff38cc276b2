"""Closed-form predictions for regularity and depth of S/I^t.

Stars use the center as the last vertex; paths number their edges
e_i = {x_i, x_{i+1}} with weight w_i. Every predictor returns
:class:`Prediction` objects that say whether the value is an equality or a
one-sided bound, and whether the formula applies at all.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional, Sequence

from .closure import path_weights_closed


class Quantity(str, Enum):
    REG = "reg_quotient"
    DEPTH = "depth_quotient"
    DEPTH_LOWER = "depth_lower_bound"
    REG_UPPER = "reg_upper_bound"

    @property
    def is_bound(self) -> bool:
        return self in (Quantity.DEPTH_LOWER, Quantity.REG_UPPER)

    @property
    def invariant(self) -> str:
        return "reg" if self in (Quantity.REG, Quantity.REG_UPPER) else "depth"


@dataclass(frozen=True)
class Prediction:
    quantity: Quantity
    value: Optional[int]
    applicable: bool
    reason: str
    source: str

    def holds_for(self, computed: int) -> bool:
        if not self.applicable:
            raise ValueError("prediction is not applicable")
        if self.quantity is Quantity.DEPTH_LOWER:
            return computed >= self.value
        if self.quantity is Quantity.REG_UPPER:
            return computed <= self.value
        return computed == self.value

    def to_json(self) -> dict:
        d = asdict(self)
        d["quantity"] = self.quantity.value
        return d


def _ok(q: Quantity, value: int, source: str, reason: str = "hypotheses hold") -> Prediction:
    return Prediction(q, int(value), True, reason, source)


def _na(q: Quantity, reason: str, source: str) -> Prediction:
    return Prediction(q, None, False, reason, source)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_weights(weights: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in weights)
    if not w:
        raise ValueError("empty weight list")
    if any(x < 1 for x in w):
        raise ValueError("weights must be positive")
    return w


def _check_power(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise ValueError("power must be a positive integer")


# -- stars ---------------------------------------------------------------------


def star_invariants(weights: Sequence[int], t: int = 1) -> tuple[Prediction, Prediction]:
    w = _check_weights(weights)
    _check_power(t)
    top = max(w)
    reg = 2 * (t - 1) * top + top + sum(x - 1 for x in w)
    return _ok(Quantity.REG, reg, "star"), _ok(Quantity.DEPTH, 1, "star")


# -- paths -------------------------------------------------------------------


def trivial_path_invariants(n: int, t: int = 1) -> tuple[Prediction, Prediction]:
    if n < 2:
        raise ValueError("a path needs at least two vertices")
    _check_power(t)
    reg = (n + 1) // 3 + 2 * (t - 1)
    depth = max(ceil_div(n - t + 1, 3), 1)
    return _ok(Quantity.REG, reg, "trivial_path"), _ok(Quantity.DEPTH, depth, "trivial_path")


def _nontrivial_closed(w: tuple[int, ...]) -> Optional[str]:
    if all(x == 1 for x in w):
        return "not-applicable: trivially weighted"
    if not path_weights_closed(w):
        return "not-integrally-closed"
    return None


def small_path_invariants(weights: Sequence[int], t: int = 1) -> tuple[Prediction, Prediction]:
    """Paths on at most four vertices.

    The depth entry is an equality where the formula covers the weight
    pattern, otherwise a lower bound of 1 or not applicable.
    """
    w = _check_weights(weights)
    _check_power(t)
    n = len(w) + 1
    src = "small_path"
    if n > 4:
        raise ValueError("small_path_invariants needs n <= 4")
    problem = _nontrivial_closed(w)
    if problem:
        return _na(Quantity.REG, problem, src), _na(Quantity.DEPTH, problem, src)
    reg = _ok(Quantity.REG, 2 * t * max(w) - 1, src)
    if n <= 3:
        return reg, _ok(Quantity.DEPTH, 1, src)
    w1, w2, w3 = w
    if t == 1:
        return reg, _ok(Quantity.DEPTH, 2 if w2 == 1 else 1, src)
    if w1 == w3 == 1 and w2 > 1:
        return reg, _ok(Quantity.DEPTH, 1, src)
    if w1 > 1 and w3 > 1 and w2 == 1:
        return reg, _ok(Quantity.DEPTH, 2, src)
    # one heavy end edge: only the bound depth >= 1 is known
    if (w2 == w3 == 1) or (w1 == w2 == 1):
        return reg, _ok(Quantity.DEPTH_LOWER, 1, "small_path_power_bound", "single heavy end edge")
    return reg, _na(Quantity.DEPTH, "not-applicable: weight pattern not covered", src)


def _orientations(w: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [w, tuple(reversed(w))] if w != tuple(reversed(w)) else [w]


def distinguished_index(weights: Sequence[int]) -> Optional[tuple[tuple[int, ...], int]]:
    """Orientation and 1-based edge index i for the general path formulas.

    i is the first heavy edge of the orientation, with i <= n-3 and
    w_i >= w_{i+2}. Among the valid choices the smallest (i, orientation)
    wins, which makes the choice independent of the input direction.
    """
    w = _check_weights(weights)
    n = len(w) + 1
    cands = []
    for o in _orientations(w):
        i = next((k for k, x in enumerate(o, start=1) if x >= 2), None)
        if i is None or i > n - 3:
            continue
        if o[i - 1] >= o[i + 1]:
            cands.append((i, o))
    if not cands:
        return None
    i, o = min(cands)
    return o, i


def general_path_values(o: Sequence[int], i: int) -> tuple[int, int]:
    """reg and depth of S/I for orientation ``o`` and distinguished index i (1-based)."""
    n = len(o) + 1
    wi, wj = o[i - 1], o[i + 1]
    reg = max(2 * wi + (i - 1) // 3 + (n - i - 1) // 3, 2 * wj + (i - 2) // 3 + (n - i) // 3) - 1
    a = 0 if wj == 1 else 1
    depth = min(ceil_div(i, 3) + ceil_div(n - i - a, 3), ceil_div(i - 2, 3) + ceil_div(n - i - 2, 3) + 1)
    return reg, depth


def path_invariants(weights: Sequence[int]) -> tuple[Prediction, Prediction]:
    w = _check_weights(weights)
    n = len(w) + 1
    src = "general_path"
    if n < 5:
        raise ValueError("path_invariants needs n >= 5")
    problem = _nontrivial_closed(w)
    if problem is None and distinguished_index(w) is None:
        problem = "not-applicable: no admissible distinguished edge"
    if problem:
        return _na(Quantity.REG, problem, src), _na(Quantity.DEPTH, problem, src)
    o, i = distinguished_index(w)
    reg, depth = general_path_values(o, i)
    why = f"distinguished edge i={i}" + (" after reversal" if o != w else "")
    return _ok(Quantity.REG, reg, src, why), _ok(Quantity.DEPTH, depth, src, why)


def path_power_reg(weights: Sequence[int], t: int) -> Prediction:
    w = _check_weights(weights)
    _check_power(t)
    n = len(w) + 1
    if n <= 4:
        return small_path_invariants(w, t)[0]
    base = path_invariants(w)[0]
    if not base.applicable:
        return _na(Quantity.REG, base.reason, "path_power")
    return _ok(Quantity.REG, base.value + 2 * (t - 1) * max(w), "path_power", base.reason)


def _depth_bounds(o: tuple[int, ...], t: int) -> list[tuple[int, str]]:
    n = len(o) + 1
    out = []
    heavy = [k for k, x in enumerate(o, start=1) if x >= 2]
    # w_1 > w_3, all other edges trivial
    if o[0] > o[2] and all(k in (1, 3) for k in heavy):
        floor = 1 if o[2] == 1 else 2
        out.append((max(ceil_div(n - t + 1, 3), floor), "path_depth_bound_first_edge"))
    if t >= 2:
        for i in range(1, n - 2):
            if o[i - 1] > o[i + 1] and all(k in (i, i + 2) for k in heavy):
                if o[i + 1] == 1:
                    if t == 2 and i % 3 == 1 and n % 3 == 2:
                        val = ceil_div(n - 1, 3)
                    else:
                        val = max(ceil_div(n - t, 3), 1)
                else:
                    val = max(ceil_div(n - t, 3), 2)
                out.append((val, "path_depth_bound_inner_edge"))
    return out


def path_power_depth_bound(weights: Sequence[int], t: int) -> Prediction:
    """Strongest applicable lower bound on depth(S/I^t) for n >= 5."""
    w = _check_weights(weights)
    _check_power(t)
    n = len(w) + 1
    if n < 5:
        raise ValueError("path_power_depth_bound needs n >= 5")
    problem = _nontrivial_closed(w)
    if problem:
        return _na(Quantity.DEPTH_LOWER, problem, "path_depth_bound")
    bounds = [b for o in _orientations(w) for b in _depth_bounds(o, t)]
    if not bounds:
        return _na(Quantity.DEPTH_LOWER, "not-applicable: equal weights two edges apart", "path_depth_bound")
    value, source = max(bounds)
    return _ok(Quantity.DEPTH_LOWER, value, source)


# -- router ------------------------------------------------------------------


FAMILIES = ("path", "star", "cycle")


def predict(family: str, weights: Sequence[int], t: int = 1) -> tuple[Prediction, Prediction]:
    """(reg prediction, depth prediction) for S/I(G)^t, routed by family and regime."""
    w = _check_weights(weights)
    _check_power(t)
    if family == "star":
        return star_invariants(w, t)
    if family == "cycle":
        why = "not-applicable: no formulas for cycles"
        return _na(Quantity.REG, why, "cycle"), _na(Quantity.DEPTH, why, "cycle")
    if family != "path":
        raise ValueError(f"unknown family {family!r}")
    n = len(w) + 1
    if all(x == 1 for x in w):
        return trivial_path_invariants(n, t)
    if n <= 4:
        return small_path_invariants(w, t)
    if t == 1:
        return path_invariants(w)
    return path_power_reg(w, t), path_power_depth_bound(w, t)
