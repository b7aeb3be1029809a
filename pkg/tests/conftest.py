import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rainbow_kit import EdgeColoredGraph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# acceptance verdict lines, echoed in the terminal summary
ACCEPTANCE_KEY = pytest.StashKey[list]()


@st.composite
def graphs(draw, min_n=1, max_n=8, max_colors=None, min_density=0.0):
    """A random simple edge-colored graph; pairs are present with a drawn density."""
    n = draw(st.integers(min_n, max_n))
    k = max_colors or max(1, n * (n - 1) // 2)
    palette = draw(st.integers(1, max(1, k)))
    density = draw(st.floats(min_density, 1.0))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.floats(0, 1)) < density:
                edges.append((u, v, draw(st.integers(0, palette - 1))))
    return EdgeColoredGraph(n, edges)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria (each prints a PASS/FAIL line)")


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
