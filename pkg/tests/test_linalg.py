from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zipstrata import linalg

small = st.integers(min_value=-6, max_value=6)


def test_solve_and_inverse():
    a = [[2, 1], [1, 3]]
    x = linalg.solve(a, [3, 5])
    assert x == (Fraction(4, 5), Fraction(7, 5))
    inv = linalg.inverse(a)
    assert linalg.matmul(a, inv) == linalg.identity(2)


def test_singular_raises():
    with pytest.raises(ValueError):
        linalg.solve([[1, 2], [2, 4]], [1, 1])


def test_rank_and_nullspace():
    a = [[1, 2, 3], [2, 4, 6]]
    assert linalg.rank(a) == 1
    basis = linalg.nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert linalg.matvec(a, v) == (0, 0)


def test_common_denominator():
    assert linalg.common_denominator([Fraction(1, 4), Fraction(5, 6), 3]) == 12
    assert linalg.common_denominator([]) == 1


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_solve_round_trip(a, b):
    if linalg.rank(a) < 3:
        with pytest.raises(ValueError):
            linalg.solve(a, b)
    else:
        assert linalg.matvec(a, linalg.solve(a, b)) == tuple(b)
