import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ipfmonoid.config import DEFAULT_SEED  # noqa: E402
from ipfmonoid.monoid import IpfElement  # noqa: E402
from ipfmonoid.permutation import Permutation  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)


def permutations(n):
    return st.permutations(range(1, n + 1)).map(Permutation)


def points(n, max_coord=20):
    return st.tuples(*[st.integers(1, max_coord)] * n)


@st.composite
def elements(draw, n=None, max_coord=20):
    if n is None:
        n = draw(st.integers(1, 4))
    return IpfElement(draw(permutations(n)), draw(points(n, max_coord)), draw(points(n, max_coord)))


@st.composite
def element_tuples(draw, size, max_coord=20):
    n = draw(st.integers(1, 4))
    return tuple(draw(elements(n, max_coord)) for _ in range(size))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(acceptance.REPORT):
        terminalreporter.write_line(line)
