from __future__ import annotations

import pytest
from hypothesis import settings

from bredux.graph import enumerate_graphs

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_graphs():
    """One representative of every isomorphism class with 1..6 vertices."""
    return [g for n in range(1, 7) for g in enumerate_graphs(n, dedup=True)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
