from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edgeideals.ideal import MonomialIdeal
from edgeideals.monomial import VariableContext

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance criteria append (number, passed, detail) here; printed at the end of the run
ACCEPTANCE_RESULTS: list[tuple[int, bool, str]] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")


@st.composite
def ideals(draw, max_vars: int = 4, max_gens: int = 6, max_exp: int = 3):
    n = draw(st.integers(1, max_vars))
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(VariableContext(n), gens)


@st.composite
def ideal_pairs(draw, max_vars: int = 4, max_gens: int = 5, max_exp: int = 3):
    n = draw(st.integers(1, max_vars))
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).filter(any)
    ctx = VariableContext(n)
    a = MonomialIdeal(ctx, draw(st.lists(vec, min_size=1, max_size=max_gens)))
    b = MonomialIdeal(ctx, draw(st.lists(vec, min_size=1, max_size=max_gens)))
    u = tuple(draw(st.lists(st.integers(0, max_exp + 2), min_size=n, max_size=n)))
    return a, b, u
