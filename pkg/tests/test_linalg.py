from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bezminors.linalg import RationalMatrix, det, rank, trailing_minors

from conftest import laplace_det, matrices, small_rationals


def test_identity_det():
    assert det(RationalMatrix.identity(4)) == 1


def test_example2_bezout_det(example2):
    assert det(RationalMatrix(example2["B"])) == 135


def test_repeated_row():
    assert det(RationalMatrix([[1, 2, 3], [4, 5, 6], [1, 2, 3]])) == 0


def test_needs_pivoting():
    assert det(RationalMatrix([[0, 1], [1, 0]])) == -1
    assert det(RationalMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1


def test_rational_entries():
    m = RationalMatrix([["1/2", "1/3"], ["1/4", "1/5"]])
    assert det(m) == Fraction(1, 10) - Fraction(1, 12)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2]])


class TestTrailingMinors:
    def test_example1(self, example1):
        assert trailing_minors(RationalMatrix(example1["B"])) == [-2, -24, 0]

    def test_example2_delta(self, example2):
        assert trailing_minors(RationalMatrix(example2["Delta"])) == [3, 18, 135]

    def test_zero(self):
        assert trailing_minors(RationalMatrix.zeros(3)) == [0, 0, 0]

    def test_block(self):
        m = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
        assert m.trailing(2) == RationalMatrix([[5, 6], [8, 10]])


class TestRank:
    def test_example1(self, example1):
        assert rank(RationalMatrix(example1["B"])) == 2

    def test_identity(self):
        assert rank(RationalMatrix.identity(5)) == 5

    def test_zero(self):
        assert rank(RationalMatrix.zeros(4)) == 0


@given(matrices())
def test_det_matches_cofactor_expansion(m):
    assert det(m) == laplace_det(m.tolist())


@given(matrices())
def test_last_minor_is_det(m):
    assert trailing_minors(m)[-1] == det(m)


@given(matrices(elements=st.integers(-2, 2).map(Fraction)))
def test_full_rank_iff_nonsingular(m):
    assert (rank(m) == m.n) == (det(m) != 0)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.lists(st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n)] * 2)))
def test_det_multiplicative(pair):
    a, b = (RationalMatrix(x) for x in pair)
    assert det(a @ b) == det(a) * det(b)
