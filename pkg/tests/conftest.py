import random

import pytest

from ecplanes.ecrun import EdgeGraph


def random_graph(rng, max_deg=4, n_lo=4, n_hi=12):
    """Random simple graph with max degree in [2, max_deg]."""
    while True:
        n = rng.randint(n_lo, n_hi)
        deg = [0] * n
        edges = []
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        for u, v in pairs:
            if deg[u] < max_deg and deg[v] < max_deg and rng.random() < 0.5:
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
        if edges and max(deg) >= 2:
            return EdgeGraph(n, edges)


@pytest.fixture
def rng():
    return random.Random(12345)


# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
