import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgeideals.formulas import (
    Quantity,
    distinguished_index,
    path_invariants,
    path_power_depth_bound,
    path_power_reg,
    predict,
    small_path_invariants,
    star_invariants,
    trivial_path_invariants,
)


def values(preds):
    return tuple(p.value for p in preds)


def test_star():
    assert values(star_invariants([2, 1], 1)) == (3, 1)
    assert values(star_invariants([2, 1], 2)) == (7, 1)
    assert values(star_invariants([1, 1], 1)) == (1, 1)
    with pytest.raises(ValueError):
        star_invariants([], 1)


def test_trivial_path():
    assert values(trivial_path_invariants(5, 1)) == (2, 2)
    assert values(trivial_path_invariants(5, 2)) == (4, 2)
    assert values(trivial_path_invariants(3, 1)) == (1, 1)
    # depth never drops below 1
    assert trivial_path_invariants(3, 6)[1].value == 1


def test_small_paths():
    reg, depth = small_path_invariants([2, 1, 2], 2)
    assert (reg.value, depth.value, depth.quantity) == (7, 2, Quantity.DEPTH)
    assert values(small_path_invariants([1, 3, 1], 1)) == (5, 1)
    reg, depth = small_path_invariants([2, 1, 1], 2)
    assert reg.value == 7
    assert depth.quantity is Quantity.DEPTH_LOWER and depth.value == 1
    reg, depth = small_path_invariants([2, 2, 1], 1)
    assert not reg.applicable and reg.reason == "not-integrally-closed"


def test_general_path():
    assert values(path_invariants([2, 1, 1, 1])) == (4, 2)
    reg, depth = path_invariants([1, 2, 1, 3, 1])
    assert (reg.value, depth.value) == (6, 2)
    assert "reversal" in reg.reason
    assert not path_invariants([1, 1, 1, 1])[0].applicable
    assert distinguished_index([1, 2, 1, 3, 1]) == ((1, 3, 1, 2, 1), 2)


def test_negative_floor_and_ceiling():
    # i = 1 gives floor(-1/3) = -1 and ceil(-1/3) = 0
    assert path_invariants([3, 1, 1, 1])[1].value == 2


def test_power_reg():
    assert path_power_reg([2, 1, 1, 1], 2).value == 8
    assert path_power_reg([2, 1, 2], 3).value == 11
    assert path_power_reg([1, 2, 1, 3, 1], 2).value == 12


def test_depth_bounds():
    b = path_power_depth_bound([2, 1, 1, 1], 2)
    assert (b.quantity, b.value) == (Quantity.DEPTH_LOWER, 2)
    assert path_power_depth_bound([1, 1, 1, 2, 1, 1, 1], 2).value == 3
    assert path_power_depth_bound([1, 2, 1, 3, 1], 2).value == 2
    # equal weights two apart: no bound is stated
    assert not path_power_depth_bound([2, 1, 2, 1, 1], 2).applicable


def test_router_regimes():
    assert predict("path", [1, 1, 1], 1)[0].source == "trivial_path"
    assert predict("path", [2, 1, 1], 1)[0].source == "small_path"
    assert predict("path", [2, 1, 1, 1], 1)[0].source == "general_path"
    assert predict("path", [2, 1, 1, 1], 2)[1].quantity is Quantity.DEPTH_LOWER
    assert not predict("cycle", [1, 1, 1], 1)[0].applicable
    with pytest.raises(ValueError):
        predict("tree", [1], 1)


def test_small_and_power_regimes_agree_at_n4():
    for w in [(2, 1, 2), (1, 3, 1), (3, 1, 1)]:
        for t in (1, 2, 3):
            assert small_path_invariants(w, t)[0].value == (2 * max(w) - 1) + 2 * (t - 1) * max(w)


weights = st.lists(st.integers(1, 3), min_size=1, max_size=8)


@given(weights, st.integers(1, 3))
def test_reversal_invariance(w, t):
    assert predict("path", w, t) == predict("path", w[::-1], t)


@given(weights, st.integers(1, 3))
def test_totality(w, t):
    # every vector is routed somewhere and carries a reason when not applicable
    for p in predict("path", w, t):
        assert p.applicable == (p.value is not None)
        assert p.reason


def test_every_closed_nontrivial_path_gets_an_equality_at_t1():
    for n in range(5, 9):
        for w in itertools.product((1, 2, 3), repeat=n - 1):
            reg, depth = predict("path", w, 1)
            if reg.applicable:
                assert depth.applicable and depth.quantity is Quantity.DEPTH
