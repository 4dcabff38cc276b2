"""Acceptance criteria 1-11.

Each test appends one (number, passed, detail) line to the acceptance log,
which conftest prints at the end of the run. Values tagged [DERIVED] were
produced by the independent Taylor-strand oracle or the full sweeps and then
frozen here; values tagged [PAPER] are the published numbers.
"""

import random
import time

import pytest

from edgeideals.betti import betti_taylor_strand
from edgeideals.formulas import predict
from edgeideals.graph import build_family, edge_ideal
from edgeideals.harness import EXAMPLES, Engine, run_suite

pytestmark = pytest.mark.slow


def _summary(match=0, bound=0, skipped=0, not_applicable=0, not_closed=0):
    total = match + bound + skipped
    return {
        "total": total, "match": match, "bound_satisfied": bound, "mismatch": 0, "skipped": skipped,
        "skipped_by_reason": {"not-applicable": not_applicable, "resource-cap": 0, "not-integrally-closed": not_closed},
    }


# [DERIVED] sweep summaries, frozen after the engine and the Taylor oracle agreed on them
FROZEN = {
    "star": _summary(match=720),
    "trivial-path": _summary(match=28),
    "small-path": _summary(match=150, bound=12, skipped=54, not_closed=54),
    "path": _summary(match=266, bound=48, skipped=3154, not_applicable=18, not_closed=3136),
    "examples": _summary(match=13, bound=13),
    "oracle": _summary(match=400),
    "polarization": _summary(match=400),
    "splitting": _summary(match=7803),
    "colon": _summary(match=1468),
    "closure": _summary(match=115),
    "exact-sequence": _summary(bound=200),
}

# [PAPER] published depth(S/I^2) values for the worked path examples
PAPER_EXAMPLE_DEPTHS = {
    (2, 1, 1, 1): 2, (2, 1, 1, 1, 1): 2, (2, 1, 1, 1, 1, 1): 2,
    (2, 1, 3, 1): 2, (4, 1, 2, 1, 1): 2, (2, 1, 3, 1, 1, 1): 2,
    (1, 2, 1, 1): 1, (1, 2, 1, 1, 1): 2, (1, 2, 1, 1, 1, 1): 2, (1, 1, 1, 2, 1, 1, 1): 3,
    (1, 2, 1, 3, 1): 2, (1, 2, 1, 3, 1, 1): 2, (1, 2, 1, 3, 1, 1, 1): 2,
}


@pytest.fixture(scope="module")
def engine():
    return Engine()


def _oracle_sample(engine, family, max_n, max_weight, max_t, size=40, seed=0):
    """Taylor-strand tables agree with the engine on a sample of the sweep."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(size):
        n = rng.randint(3, max_n)
        w = tuple(rng.randint(1, max_weight) for _ in range(n - 1))
        ideal = edge_ideal(build_family(family, w)).power(rng.randint(1, max_t))
        if len(ideal) > 12:
            continue
        assert betti_taylor_strand(ideal) == engine.table(ideal), (family, w)
        checked += 1
    return checked


def _criterion(log, number, name, engine, limit_s, **caps):
    start = time.perf_counter()
    rep = run_suite(name, engine, **caps)
    elapsed = time.perf_counter() - start
    s = rep.summary
    frozen_ok = s == FROZEN[name]
    passed = rep.ok and frozen_ok and elapsed < limit_s
    detail = (
        f"{name}: {s['total']} cases, {s['match']} match, {s['bound_satisfied']} bound, "
        f"{s['mismatch']} mismatch, {s['skipped']} skipped; {elapsed:.1f}s (limit {limit_s}s)"
    )
    if not frozen_ok:
        detail += "; summary differs from frozen value"
    log.append((number, passed, detail))
    assert rep.ok, [c.to_json() for c in rep.mismatches[:5]]
    assert frozen_ok, s
    assert elapsed < limit_s
    return rep


def test_criterion_01_star(acceptance_log, engine):
    assert _oracle_sample(engine, "star", 5, 3, 3) > 10
    _criterion(acceptance_log, 1, "star", engine, 600)


def test_criterion_02_trivial_path(acceptance_log, engine):
    assert _oracle_sample(engine, "path", 8, 1, 2) > 10
    _criterion(acceptance_log, 2, "trivial-path", engine, 600)


def test_criterion_03_small_path(acceptance_log, engine):
    assert _oracle_sample(engine, "path", 4, 4, 3) > 10
    rep = _criterion(acceptance_log, 3, "small-path", engine, 300)
    regs = [c for c in rep.cases if c.quantity == "reg_quotient" and c.computed is not None]
    assert all(c.computed == 2 * c.params["t"] * max(c.params["weights"]) - 1 for c in regs)


def test_criterion_04_general_path(acceptance_log, engine):
    assert _oracle_sample(engine, "path", 8, 3, 2) > 10
    rep = _criterion(acceptance_log, 4, "path", engine, 3600)
    t1 = [c for c in rep.cases if c.params.get("t") == 1 and c.verdict.value != "skipped"]
    assert t1 and all(c.verdict.value == "match" for c in t1)


def test_criterion_05_examples(acceptance_log, engine):
    # [PAPER] values, checked against the harness table first
    assert {w: d for _, w, d in EXAMPLES} == PAPER_EXAMPLE_DEPTHS
    rep = _criterion(acceptance_log, 5, "examples", engine, 1200)
    depth = {tuple(c.params["weights"]): c.computed for c in rep.cases if c.quantity == "depth_quotient"}
    assert depth == PAPER_EXAMPLE_DEPTHS
    assert depth[(1, 1, 1, 2, 1, 1, 1)] == 3
    assert predict("path", (1, 1, 1, 2, 1, 1, 1), 2)[1].value == 3


def test_criterion_06_oracle(acceptance_log, engine):
    _criterion(acceptance_log, 6, "oracle", engine, 1800)


def test_criterion_07_polarization(acceptance_log, engine):
    _criterion(acceptance_log, 7, "polarization", engine, 1800)


def test_criterion_08_splitting(acceptance_log, engine):
    _criterion(acceptance_log, 8, "splitting", engine, 1800)


def test_criterion_09_colon(acceptance_log, engine):
    _criterion(acceptance_log, 9, "colon", engine, 1800)


def test_criterion_10_closure(acceptance_log, engine):
    rep = _criterion(acceptance_log, 10, "closure", engine, 3600)
    assert rep.notes["selected_interpretation"] == "B"
    assert rep.notes["disagreements_by_interpretation"]["B"] == 0
    assert rep.notes["weighted_graphs_covered"] == 229_791
    acceptance_log[-1] = (10, acceptance_log[-1][1], acceptance_log[-1][2] + f"; {rep.notes}")


def test_criterion_11_exact_sequence(acceptance_log, engine):
    _criterion(acceptance_log, 11, "exact-sequence", engine, 1800)
