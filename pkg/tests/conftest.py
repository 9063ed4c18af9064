import itertools

import pytest
from hypothesis import settings, strategies as st

from tourpaths.core import Tournament, delete_arc, Digraph
from tourpaths.pathtype import OrientedPathType

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def cycle3() -> Tournament:
    return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def all_labeled(n: int):
    m = n * (n - 1) // 2
    for bits in range(1 << m):
        yield Tournament.from_bits(n, bits)


def all_digraphs(n: int):
    """Every labelled tournament of order n and every single-arc deletion of it."""
    for t in all_labeled(n):
        yield t
        for x, y in itertools.combinations(range(n), 2):
            yield delete_arc(t, x, y)


@st.composite
def tournaments(draw, min_n: int = 2, max_n: int = 7) -> Tournament:
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Tournament.from_bits(n, bits)


@st.composite
def digraphs(draw, min_n: int = 2, max_n: int = 7) -> Digraph:
    t = draw(tournaments(min_n, max_n))
    if t.n < 2 or not draw(st.booleans()):
        return t
    x, y = draw(st.lists(st.integers(0, t.n - 1), min_size=2, max_size=2, unique=True))
    return delete_arc(t, x, y)


@st.composite
def path_types(draw, min_order: int = 2, max_order: int = 9) -> OrientedPathType:
    n = draw(st.integers(min_order, max_order))
    return OrientedPathType.from_code(n, draw(st.integers(0, (1 << (n - 1)) - 1)))


@st.composite
def digraph_with_type(draw, min_n: int = 2, max_n: int = 7):
    d = draw(digraphs(min_n, max_n))
    p = OrientedPathType.from_code(d.n, draw(st.integers(0, (1 << (d.n - 1)) - 1)))
    return d, p


@pytest.fixture
def c3() -> Tournament:
    return cycle3()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
