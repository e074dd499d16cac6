import itertools
from math import comb

import pytest
from hypothesis import strategies as st

from regtourn.core import cycle3, transitive
from regtourn.harness import tournament_from_mask


@st.composite
def tournaments(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << comb(n, 2)) - 1))
    return tournament_from_mask(n, mask)


def brute_isomorphisms(t1, t2):
    """All isomorphisms t1 -> t2 by trying every permutation."""
    if t1.n != t2.n:
        return []
    found = []
    for perm in itertools.permutations(range(t1.n)):
        if all(t1.has_edge(i, j) == t2.has_edge(perm[i], perm[j])
               for i in range(t1.n) for j in range(t1.n) if i != j):
            found.append(perm)
    return found


def brute_score_set(n):
    return {tuple(sorted(t.outdegrees())) for t in
            (tournament_from_mask(n, m) for m in range(1 << comb(n, 2)))}


@pytest.fixture
def c3():
    return cycle3()


@pytest.fixture
def t4():
    return transitive(4)


ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run the greedy sweep up to order 14")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
