from fractions import Fraction

import pytest

from cubicrel.lpoly import LPoly, RatFunc, bareiss_nullspace, poly_gcd, primitive, ratfunc_kernel, ratfunc_rank


def P(*c):
    return LPoly(c)


def test_trimming_and_degree():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P().degree == -1
    assert not P(0, 0)


def test_arithmetic():
    a, b = P(1, 1), P(-1, 1)
    assert a * b == P(-1, 0, 1)
    assert a + b == P(0, 2)
    assert a - a == P()
    assert a(Fraction(2)) == 3


def test_division():
    q, r = P(-1, 0, 1).divmod(P(1, 1))
    assert q == P(-1, 1) and not r
    with pytest.raises(ArithmeticError):
        P(1, 0, 1).exact_div(P(1, 1))
    with pytest.raises(ZeroDivisionError):
        P(1).divmod(P())


def test_gcd_and_content():
    g = poly_gcd(P(-1, 0, 1), P(1, 2, 1))
    assert g == P(1, 1)
    assert P(2, 4).content() == 2
    assert P(Fraction(1, 2), Fraction(3, 4)).content() == Fraction(1, 4)


def test_str():
    assert str(P(1, -1, 1)) == "1 - L + L^2"
    assert str(P(0, 0, 3)) == "3L^2"


def test_ratfunc_reduces():
    r = RatFunc(P(-1, 0, 1), P(1, 1))
    assert r.num == P(-1, 1) and r.den == P(1)


def test_primitive_divides_common_factor():
    out = primitive([P(0, 2), P(0, 0, 4)])
    assert out == [P(1), P(0, 2)]


def test_bareiss_exact_rational_output():
    A = [[1, -1, -1, 0, 2, 2, 0], [1, -1, -1, 0, 2, 2, 1], [1, 2, 0, 0, 0, 0, 0]]
    basis = bareiss_nullspace(A)
    assert len(basis) == 4
    for v in basis:
        assert all(type(x) is Fraction for x in v)
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)


def test_bareiss_full_rank_and_zero():
    assert bareiss_nullspace([[1, 0], [0, 1]]) == []
    assert len(bareiss_nullspace([[0, 0, 0]])) == 3


def test_ratfunc_kernel_and_rank():
    # columns x, L*x: dependent over Q(L)
    m = [[P(1), P(0, 1)], [P(2), P(0, 2)]]
    assert ratfunc_rank(m) == 1
    (k,) = ratfunc_kernel(m, 2)
    assert k[0] + k[1] * P(0, 1) == P()
