from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conet import linalg
from conet.errors import InconsistentSystem
from conet.scalar import ONE, W, ZERO, Scalar

small = st.integers(min_value=-9, max_value=9)
entries = st.builds(Scalar, small, small)


def mat(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


def test_rank_examples():
    assert linalg.rank([[ONE, ZERO], [ZERO, ONE]]) == 2
    assert linalg.rank([[ONE, ONE], [ONE, ONE]]) == 1
    assert linalg.rank([[ZERO, ZERO]]) == 0
    assert linalg.rank([[W, ONE], [W * W, W]]) == 1


def test_kernel_basis():
    rows = [[ONE, ONE, ZERO]]
    ker = linalg.kernel_basis(rows, 3)
    assert len(ker) == 2
    for v in ker:
        assert v[0] + v[1] == ZERO


def test_solve():
    a = [[ONE, ONE], [ONE, -ONE]]
    x = linalg.solve(a, [Scalar(3), ONE])
    assert x == [Scalar(2), ONE]
    with pytest.raises(InconsistentSystem):
        linalg.solve([[ONE, ZERO], [ONE, ZERO]], [ZERO, ONE])


def test_det_examples():
    assert linalg.det([[Scalar(2)]]) == Scalar(2)
    assert linalg.det([[ONE, ONE], [ONE, ONE]]) == ZERO
    a = [[ONE, Scalar(2), ZERO], [ZERO, W, ONE], [ONE, ZERO, ONE]]
    # cofactor expansion by hand
    assert linalg.det(a) == W + Scalar(2)


def test_char_poly_diagonal():
    a = [[Scalar(2), ZERO], [ZERO, Scalar(3)]]
    # (x-2)(x-3) = 6 - 5x + x^2
    assert linalg.char_poly(a) == [Scalar(6), Scalar(-5), ONE]


@settings(max_examples=30, deadline=None)
@given(mat(3))
def test_cayley_hamilton(a):
    p = linalg.char_poly(a)
    acc = [[ZERO] * 3 for _ in range(3)]
    power = linalg.identity(3)
    for c in p:
        for i in range(3):
            for j in range(3):
                acc[i][j] = acc[i][j] + c * power[i][j]
        power = linalg.mat_mul(power, a)
    assert all(x == ZERO for row in acc for x in row)


@settings(max_examples=30, deadline=None)
@given(mat(3), mat(3))
def test_det_multiplicative(a, b):
    assert linalg.det(linalg.mat_mul(a, b)) == linalg.det(a) * linalg.det(b)


@settings(max_examples=30, deadline=None)
@given(mat(3))
def test_rank_bounds(a):
    r = linalg.rank(a)
    assert 0 <= r <= 3
    assert (r == 3) == (linalg.det(a) != ZERO)
