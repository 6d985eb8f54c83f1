import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pdthrottle.graph import build_graph, is_connected

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    """Random simple graphs; with ``connected`` a random spanning tree is added first."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        seed = draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        for v in range(1, n):
            u = rng.randrange(v)
            edges.add((u, v))
    G = build_graph(n, sorted(edges))
    assert not connected or is_connected(G)
    return G


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
