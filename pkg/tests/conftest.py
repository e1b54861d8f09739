import pytest
from hypothesis import strategies as st

from pathmajority import build_tree

F1_PARENTS = [0, 1, 2, 3, 4, 3, 6, 1, 8, 9, 9]
F1_LABELS = [1, 2, 1, 3, 1, 2, 2, 3, 3, 1, 3]


@pytest.fixture
def f1():
    return build_tree(F1_PARENTS, F1_LABELS)


@st.composite
def trees(draw, max_n=60, max_sigma=6):
    """Random trees: each node attaches to an earlier one."""
    n = draw(st.integers(1, max_n))
    sigma = draw(st.integers(1, max_sigma))
    parents = [0] + [draw(st.integers(1, i - 1)) for i in range(2, n + 1)]
    labels = draw(st.lists(st.integers(1, sigma), min_size=n, max_size=n))
    return build_tree(parents, labels)


taus = st.sampled_from(["0.9", "0.5", "1/3", "0.3", "0.25", "0.1"])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
