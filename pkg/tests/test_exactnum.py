from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from magicchart.exactnum import (IntegralityError, as_integer, binom_top, is_canonical, rat, rat_binom,
                                 rational_sqrt)


def test_rat_converts_sympy_rationals():
    assert rat(sympy.Rational(-7, 2)) == Fraction(-7, 2)
    assert rat(3) == Fraction(3)
    with pytest.raises(TypeError):
        rat(sympy.sqrt(2))


@given(st.integers(0, 30), st.integers(0, 30))
def test_rat_binom_matches_comb(n, k):
    assert rat_binom(n, k) == comb(n, k)


def test_rat_binom_rational_upper_argument():
    # C(1/2, 2) = (1/2)(-1/2) / 2
    assert rat_binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert rat_binom(Fraction(5, 3), 0) == 1
    with pytest.raises(ValueError):
        rat_binom(3, -1)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=100), st.integers(1, 20))
def test_rat_binom_pascal_rule(x, k):
    assert rat_binom(x, k) == rat_binom(x - 1, k) + rat_binom(x - 1, k - 1)


def test_rat_binom_symbolic():
    a = sympy.Symbol('a')
    assert sympy.expand(rat_binom(a, 2) - a * (a - 1) / 2) == 0


def test_binom_top():
    # C(k + c, k)
    assert binom_top(3, 2) == comb(5, 2)
    assert binom_top(Fraction(-1, 2), 1) == Fraction(1, 2)


def test_as_integer():
    assert as_integer(Fraction(14, 2)) == 7
    with pytest.raises(IntegralityError):
        as_integer(Fraction(7, 2), 'half')


@given(st.fractions(min_value=0, max_denominator=50))
def test_rational_sqrt_of_squares(q):
    assert rational_sqrt(q * q) == q


def test_rational_sqrt_irrational_and_negative():
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)


@given(st.fractions(max_denominator=1000))
def test_fractions_stay_canonical(q):
    assert is_canonical(q * 3 / 7 - q)
