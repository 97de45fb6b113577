import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from zeta_arr.errors import PreconditionError
from zeta_arr.realization import Arrangement

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "repo", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much]
)
settings.load_profile("repo")


@st.composite
def arrangements(draw, max_n=6, max_d=3, entries=2):
    """Random essential, loop-free integer arrangements over Q."""
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(d, max_n))
    rows = draw(st.lists(st.lists(st.integers(-entries, entries), min_size=n, max_size=n), min_size=d, max_size=d))
    try:
        return Arrangement(rows)
    except PreconditionError:
        from hypothesis import assume

        assume(False)


@st.composite
def matroids(draw, max_n=6, max_d=3):
    return draw(arrangements(max_n, max_d)).matroid


def weights(n, lo=-4, hi=4):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(tuple)


@pytest.fixture
def u23():
    return Arrangement([[1, 0, 1], [0, 1, 1]])


@pytest.fixture
def k4():
    return Arrangement([[1, 1, 0, 1, 0, 0], [-1, 0, 1, 0, 1, 0], [0, -1, -1, 0, 0, 1]])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
