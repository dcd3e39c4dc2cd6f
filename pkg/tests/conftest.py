import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from shannon_curvature import Graph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, max_vertices=6, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, k in zip(pairs, keep) if k])


ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    def _record(criterion, ok, detail=""):
        ACCEPTANCE_LINES.append("%s criterion %s %s" % ("PASS" if ok else "FAIL", criterion, detail))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
