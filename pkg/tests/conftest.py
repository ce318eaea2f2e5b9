from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from bezminors import Polynomial, RationalMatrix

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=4)
small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def polys(draw, max_degree=6, elements=rationals):
    return Polynomial(draw(st.lists(elements, max_size=max_degree + 1)))


@st.composite
def matrices(draw, max_n=5, elements=small_rationals):
    n = draw(st.integers(1, max_n))
    return RationalMatrix(draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)))


def laplace_det(rows):
    """Cofactor expansion along the first row; independent of any elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * a * laplace_det(minor)
    return total


@pytest.fixture
def example1():
    # P = (x+1)(x-1)(x-4), Q = (x-1)(x-2)(x-3)
    return {
        "P": Polynomial([4, -1, -4, 1]),
        "P_roots": [-1, 1, 4],
        "Q": Polynomial([-6, 11, -6, 1]),
        "B": [[-38, 48, -10], [48, -60, 12], [-10, 12, -2]],
        "Delta": [[0, 0, 6], [0, 0, 2], [-24, 12, -2]],
        "minors": [-2, -24, 0],
    }


@pytest.fixture
def example2():
    # P = (x-2)(x-4)(x-6), Q = (x-1)(x-3)(x-5)
    return {
        "P": Polynomial([-48, 44, -12, 1]),
        "P_roots": [2, 4, 6],
        "Q": Polynomial([-15, 23, -9, 1]),
        "B": [[444, -252, 33], [-252, 153, -21], [33, -21, 3]],
        "Delta": [[0, 0, 15], [0, -3, 9], [3, -3, 3]],
        "minors": [3, 18, 135],
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
