from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def F(x, y=1) -> Fraction:
    return Fraction(x, y)


small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def square_matrices(n: int):
    return st.lists(st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.fixture
def aff1():
    from frobenius_lie.catalog import example_preset

    return example_preset("aff1")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and getattr(mod, "RESULTS", None):
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
