from conet import upoly
from conet.scalar import ONE, SQRT_M3, W, ZERO, Scalar


def P(*ints):
    return [Scalar(i) for i in ints]


def test_degree_and_trim():
    assert upoly.degree(upoly.trim(P(1, 2, 0))) == 1
    assert upoly.degree([]) == -1
    assert upoly.degree(P(1, 2)) == 1
    assert upoly.trim(P(0, 0)) == []


def test_mul_and_divmod():
    f = P(-1, 0, 1)  # x^2 - 1
    g = P(1, 1)  # x + 1
    q, r = upoly.pdivmod(f, g)
    assert upoly.trim(r) == []
    assert upoly.pmul(q, g) == f


def test_gcd():
    f = upoly.pmul(P(1, 1), P(-2, 1))  # (x+1)(x-2)
    g = upoly.pmul(P(1, 1), P(3, 1))  # (x+1)(x+3)
    assert upoly.pgcd(f, g) == P(1, 1)


def test_squarefree_decomposition():
    # (x-1)^2 (x+2)
    f = upoly.pmul(upoly.pmul(P(-1, 1), P(-1, 1)), P(2, 1))
    parts = upoly.squarefree_decomposition(f)
    flat = {mult: upoly.monic(p) for p, mult in parts if upoly.degree(p) > 0}
    assert flat == {2: P(-1, 1), 1: P(2, 1)}


def test_distinct_root_count():
    f = upoly.pmul(upoly.pmul(P(-1, 1), P(-1, 1)), P(2, 1))
    assert upoly.distinct_root_count(f) == 2
    assert upoly.distinct_root_count(P(1, 0, 1)) == 2


def test_binary_pattern():
    # s^2 t: coefficients of a binary cubic c0 + c1 x + c2 x^2 (+ 0 x^3)
    # with a root at infinity of multiplicity 1
    f = P(0, 0, 1)
    assert upoly.binary_pattern(f, 3) == [2, 1]
    assert upoly.binary_pattern(P(0, 1), 3) == [2, 1]
    assert upoly.binary_pattern(P(1, 3, 3, 1), 3) == [3]


def test_repeated_binary_root():
    # (x-1)^2 (x+1): repeated root at x = 1
    f = upoly.pmul(upoly.pmul(P(-1, 1), P(-1, 1)), P(1, 1))
    root = upoly.repeated_binary_root(f, 3)
    assert root == (ONE, ONE)


def test_roots_in_qw_rational():
    f = upoly.pmul(P(-2, 1), P(3, 1))
    roots = upoly.roots_in_qw(f)
    assert set(roots) == {Scalar(2), Scalar(-3)}


def test_roots_in_qw_omega():
    # x^2 + x + 1 = (x - w)(x - w^2)
    roots = upoly.roots_in_qw(P(1, 1, 1))
    assert set(roots) == {W, W * W}


def test_roots_in_qw_irrational_skipped():
    # x^2 - 2 has no roots in Q(w)
    assert upoly.roots_in_qw(P(-2, 0, 1)) == []
