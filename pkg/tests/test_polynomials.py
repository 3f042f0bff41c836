"""Exact polynomial / rational function arithmetic."""

from fractions import Fraction

import pytest

from kthprice import Polynomial, RationalFunction, polynomial_gcd

X = Polynomial.variable()


def test_construction_trims_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Polynomial([0, 0]).degree == -1
    assert not Polynomial()
    assert Polynomial([0, 0, 3]).degree == 2


def test_float_coefficients_become_exact():
    assert Polynomial([0.5]).coeffs == (Fraction(1, 2),)
    assert Polynomial([0.1]).coeffs == (Fraction(0.1),)  # exact binary value


def test_arithmetic():
    p = (X + 1) * (X - 1)
    assert p == X ** 2 - 1
    assert (X + 2) ** 3 == X ** 3 + 6 * X ** 2 + 12 * X + 8
    assert 2 * X - X == X
    assert (X ** 2 - 1) - (X ** 2) == Polynomial([-1])


def test_divmod_exact():
    num = X ** 3 - 2 * X + 5
    den = X - 3
    q, r = divmod(num, den)
    assert q * den + r == num
    assert r.degree < den.degree
    assert (X ** 4 - 1) % (X ** 2 + 1) == Polynomial()
    with pytest.raises(ZeroDivisionError):
        divmod(X, Polynomial())


def test_gcd_monic():
    g = polynomial_gcd((X - 1) * (X + 2) ** 2, (X + 2) * (X ** 2))
    assert g == X + 2
    assert polynomial_gcd(Polynomial(), X ** 2) == X ** 2  # gcd(0, p) = monic p


def test_calculus():
    p = Polynomial([5, 0, 3])          # 3x^2 + 5
    assert p.derivative() == 6 * X
    assert p.antiderivative() == X ** 3 + 5 * X
    assert p.antiderivative()(Fraction(0)) == 0
    assert p.antiderivative().derivative() == p


def test_evaluation_exact_and_float():
    p = X ** 2 + Fraction(1, 3)
    assert p(Fraction(1, 2)) == Fraction(7, 12)
    assert p(0.5) == pytest.approx(0.25 + 1 / 3)


def test_rational_function_normalisation():
    r = RationalFunction((X ** 2 - 1), (X - 1) * 2)
    # gcd cancelled, monic denominator: (x+1)/2 as num/den = (x/2+1/2)/1
    assert r.is_polynomial()
    assert r.as_polynomial() == Fraction(1, 2) * (X + 1)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(X, Polynomial())


def test_rational_function_equality_cross_multiplied():
    a = RationalFunction(X ** 2 - 1, X - 1)
    b = RationalFunction(X + 1)
    assert a == b
    assert a != b + 1
    assert RationalFunction(2 * X, 2) == X


def test_rational_function_arithmetic():
    half = RationalFunction(1, 2)
    assert half + half == 1
    r = RationalFunction(1, X) + RationalFunction(1, X + 1)
    assert r == RationalFunction(2 * X + 1, X * (X + 1))
    assert r * X == RationalFunction(2 * X + 1, X + 1)
    with pytest.raises(ZeroDivisionError):
        r / RationalFunction(Polynomial(), X)


def test_rational_function_derivative_quotient_rule():
    r = RationalFunction(X ** 2, X + 1)
    # (x^2/(x+1))' = (x^2 + 2x) / (x+1)^2
    assert r.derivative() == RationalFunction(X ** 2 + 2 * X, (X + 1) ** 2)
    # derivative of a polynomial stays polynomial
    assert RationalFunction(X ** 3).derivative() == 3 * X ** 2


def test_str_round_trip_is_readable():
    assert str(Polynomial([0, Fraction(3, 2)])) == "3/2*x"
    assert str(RationalFunction(X ** 2, X + 1)) == "(x^2) / (x + 1)"
