"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        exact rational helpers, all scalars are fractions.Fraction, binomials with rational upper
        argument accept sympy expressions too, which is used by dimform when a closed form must be
        simplified symbolically before evaluation
"""

from math import gcd
from fractions import Fraction

import sympy


class IntegralityError(ArithmeticError):
    """a value that must be an integer is not"""


class PoleError(ZeroDivisionError):
    """evaluation at a pole that does not cancel"""


def is_symbolic(x):
    return isinstance(x, sympy.Basic)


def rat(x):
    """convert int / Fraction / sympy Rational to Fraction"""
    if isinstance(x, Fraction):
        return x
    if is_symbolic(x):
        if not x.is_Rational:
            raise TypeError(f'not a rational number: {x}')
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


def rat_binom(x, k):
    """falling factorial binomial x(x-1)...(x-k+1)/k!

    Args:
        x (Fraction | int | sympy.Expr): upper argument
        k (int): nonnegative lower argument

    Returns:
        Fraction, or a sympy expression when x is symbolic
    """
    if k < 0:
        raise ValueError(f'rat_binom() negative k: {k}')

    if is_symbolic(x):
        result = sympy.Integer(1)
    else:
        x = Fraction(x)
        result = Fraction(1)

    for i in range(1, k + 1):
        result = result * (x - k + i) / i

    return result


def binom_top(c, k):
    """binomial C(k+c, k) = prod_{i=1..k} (c+i)/i, written the way closed forms print it"""
    return rat_binom(k + c, k)


def as_integer(value, what=''):
    """return int(value) or raise IntegralityError"""
    value = rat(value)
    if value.denominator != 1:
        raise IntegralityError(f'{what or "value"} is not integral: {value}')
    return value.numerator


def rational_sqrt(value):
    """exact square root of a nonnegative rational, None if irrational"""
    value = rat(value)
    if value < 0:
        return None
    root = sympy.sqrt(sympy.Rational(value.numerator, value.denominator))
    if root.is_Rational:
        return Fraction(int(root.p), int(root.q))
    return None


def is_canonical(value):
    """denominator positive and coprime to the numerator"""
    return value.denominator > 0 and gcd(abs(value.numerator), value.denominator) == 1
