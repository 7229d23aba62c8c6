"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        closed form dimension formulas for the magic chart, its Cartan powers and the adjoint varieties,
        evaluated in exact rationals.

        formulas are written with integer multiplications and divisions only, so the same function body
        evaluates a Fraction or a sympy symbol, the symbolic form is used to cancel removable poles, e.g.
        subexc_gk at a = 0 where numerator and denominator binomials vanish together.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .exactnum import PoleError, as_integer, binom_top, rat
from .utils import data_path, load_json, log, parse_rational


class AdmissibilityError(ValueError):
    pass


@lru_cache(maxsize=None)
def load_params():
    params = load_json(data_path('params.json'))
    if not params:
        raise FileNotFoundError(f"can't load parameter table {data_path('params.json')}")
    return params


def admissible(series):
    """admissible parameter values of a series as Fractions"""
    try:
        return [parse_rational(v) for v in load_params()['admissible'][series]]
    except KeyError:
        raise ValueError(f'unknown series: {series}')


def _check_admissible(a, series, what):
    a = Fraction(a)
    if a not in admissible(series):
        raise AdmissibilityError(f'{what}: a = {a} is not in {[str(x) for x in admissible(series)]}')
    return a


def _check_k(k):
    if int(k) != k or k < 0:
        raise ValueError(f'k must be a nonnegative integer, got {k}')
    return int(k)


def evaluate(formula, a, *args):
    """evaluate formula(a, *args) exactly, cancelling a removable pole at a symbolically

    Raises:
        PoleError: if the pole does not cancel
    """
    a = Fraction(a)
    try:
        return Fraction(formula(a, *args))
    except ZeroDivisionError:
        pass

    symbol = sympy.Symbol('a')
    expr = sympy.cancel(sympy.together(formula(symbol, *args)))
    value = expr.subs(symbol, sympy.Rational(a.numerator, a.denominator))
    if value.has(sympy.zoo, sympy.nan, sympy.oo) or not value.is_Rational:
        raise PoleError(f'{formula.__name__}() has a pole at a = {a}')

    log(f'evaluate()> {formula.__name__}{(a,) + args} via cancellation:', expr, log_level=3)
    return rat(value)


# region magic chart
def _der(a):
    return 4 * (a - 1) * (a - 2) / (a + 4)


def _tri(a):
    return 6 * a * (a - 1) / (a + 4)


def _g(a, b):
    return 3 * (4 * a + a * b + 4 * b - 4) * (2 * a + a * b + 2 * b) / ((a + 4) * (b + 4))


def dim_der(a):
    """dimension of the derivation algebra, 4(a-1)(a-2)/(a+4)"""
    a = Fraction(a)
    if a == -4:
        raise PoleError('dim_der() pole at a = -4')
    value = Fraction(_der(a))
    if a in admissible('derivations'):
        as_integer(value, f'dim_der({a})')
    return value


def dim_tri(a):
    """dimension of the triality algebra, 6a(a-1)/(a+4)"""
    a = Fraction(a)
    if a == -4:
        raise PoleError('dim_tri() pole at a = -4')
    value = Fraction(_tri(a))
    if a in admissible('derivations'):
        as_integer(value, f'dim_tri({a})')
    return value


def dim_g(a, b):
    """dimension of the magic chart algebra g(A, B), 3(4a+ab+4b-4)(2a+ab+2b)/((a+4)(b+4))"""
    a, b = Fraction(a), Fraction(b)
    if a == -4 or b == -4:
        raise PoleError('dim_g() pole at a = -4 or b = -4')
    value = Fraction(_g(a, b))

    rows, cols = admissible('chart_rows'), admissible('chart_cols')
    if (a in rows and b in cols) or (b in rows and a in cols):
        as_integer(value, f'dim_g({a}, {b})')
    return value
# endregion


# region cartan powers
def _exc_gk(a, k):
    return ((3 * a + 2 * k + 5) / (3 * a + 5)
            * binom_top(2 * a + 3, k) * binom_top(5 * a / 2 + 3, k) * binom_top(3 * a + 4, k)
            / (binom_top(a / 2 + 1, k) * binom_top(a + 1, k)))


def _subexc_gk(a, k):
    return ((2 * k + 2 * a + 1) / (2 * a + 1)
            * binom_top(3 * a / 2 - 1, k) * binom_top(3 * a / 2 + 1, k) * binom_top(2 * a, k)
            / (binom_top(a / 2 - 1, k) * binom_top(a / 2 + 1, k)))


def _subexc_vk(a, k):
    return ((a + k + 1) / (a + 1)
            * binom_top(2 * a + 1, k) * binom_top(3 * a / 2 + 1, k)
            / binom_top(a / 2, k))


def _subexc_v2k(a, k):
    return ((4 * k + 3 * a + 2) / ((k + 1) * (3 * a + 2))
            * binom_top(a, k) * binom_top(a + 1, k) * binom_top(3 * a / 2 - 1, k) * binom_top(3 * a / 2, k)
            * binom_top(2 * a + 1, 2 * k)
            / (binom_top(a / 2 - 1, k) * binom_top(a / 2, k) * binom_top(a, 2 * k)))


def _severi_vk(a, k):
    return ((2 * k + a) * (k + a) / (a * a)
            * binom_top(a - 1, k) * binom_top(3 * a / 2 - 1, k)
            / binom_top(a / 2, k))


def _integral(formula, series, name):
    def evaluator(a, k):
        a = _check_admissible(a, series, name)
        k = _check_k(k)
        return as_integer(evaluate(formula, a, k), f'{name}({a}, {k})')

    evaluator.__name__ = name
    return evaluator


exc_gk = _integral(_exc_gk, 'exceptional', 'exc_gk')
exc_gk.__doc__ = 'dimension of the k-th Cartan power of the adjoint module, exceptional series'

subexc_gk = _integral(_subexc_gk, 'subexceptional', 'subexc_gk')
subexc_gk.__doc__ = 'dimension of the k-th Cartan power of the adjoint module, subexceptional series'

subexc_vk = _integral(_subexc_vk, 'subexceptional', 'subexc_vk')
subexc_vk.__doc__ = 'k-th Cartan power of the distinguished module of dimension 6a + 8'

subexc_v2k = _integral(_subexc_v2k, 'subexceptional', 'subexc_v2k')
subexc_v2k.__doc__ = 'k-th Cartan power of the module V_2 of the subexceptional series'

severi_vk = _integral(_severi_vk, 'severi', 'severi_vk')
severi_vk.__doc__ = 'k-th Cartan power of the distinguished module of the Severi series, of dimension 3a + 3'
# endregion


# region explicit weyl polynomials
def _nonneg(*params):
    for p in params:
        if int(p) != p or p < 0:
            raise ValueError(f'parameters must be nonnegative integers, got {params}')
    return [int(p) for p in params]


def e7_vdim(i, j):
    """dimension of the E7 module V_{i w1 + j w7}"""
    i, j = _nonneg(i, j)
    value = (Fraction(j + 5) * Fraction(2 * i + j + 17, 17)
             * binom_top(9, j) * binom_top(11, i) * binom_top(8, i) * binom_top(16, i + j) * binom_top(13, i + j)
             / (5 * binom_top(3, i) * binom_top(8, i + j) * binom_top(5, i + j)))
    return as_integer(value, f'e7_vdim({i}, {j})')


def so12_vdim_w5w2(i, j):
    """dimension of the so12 module V_{i w2 + j w5}, i counts the adjoint weight"""
    i, j = _nonneg(i, j)
    value = (Fraction((2 * i + j + 9) * (j + 3))
             * binom_top(5, i) * binom_top(4, i) * binom_top(8, i + j) * binom_top(7, i + j) * binom_top(5, j)
             / (27 * (i + 1) * binom_top(3, i + j) * binom_top(4, i + j)))
    return as_integer(value, f'so12_vdim_w5w2({i}, {j})')


def so12_vdim_4param(a, b, c, d):
    """dimension of the so12 module V_{a w4 + b(w1 + w6) + c w5 + d w2}"""
    a, b, c, d = _nonneg(a, b, c, d)
    factors = [
        (1 + b) ** 2, 2 + b + d, 3 + b + d, (4 + a + b + d) ** 2, (5 + a + b + c + d) ** 2, 1 + d, 2 + d,
        3 + a + d, 4 + a + c + d, 2 + a, 3 + a + c, 1 + a, 2 + a + c, 1 + c, 9 + 2 * a + 2 * b + c + 2 * d,
        8 + 2 * a + 2 * b + c + d, 7 + 2 * a + 2 * b + c + d, 6 + a + 2 * b + c + d, 5 + a + 2 * b + d,
        7 + 2 * a + b + c + d,
        6 + 2 * a + b + c + d, 5 + 2 * a + b + c, 4 + a + b + c, 3 + a + b, 3 + a + b + c, 2 + a + b,
    ]
    value = Fraction(1, 158018273280000)
    for f in factors:
        value *= f
    return as_integer(value, f'so12_vdim_4param({a}, {b}, {c}, {d})')


def so12_vdim_w6w1(a, b):
    """dimension of the so12 module V_{a w6 + b w1}"""
    a, b = _nonneg(a, b)
    factors = [
        1 + b, 2 + b, 3 + b, 4 + b, 5 + b, 9 + a + b, 8 + a + b, 7 + a + b,
        6 + a + b, 5 + a + b, 7 + a, 6 + a, (5 + a) ** 2, (4 + a) ** 2, (3 + a) ** 2, 2 + a, 1 + a,
    ]
    value = Fraction(1, 548674560000)
    for f in factors:
        value *= f
    return as_integer(value, f'so12_vdim_w6w1({a}, {b})')
# endregion


# region vogel parameters and adjoint varieties
@dataclass(frozen=True)
class VogelParams:
    name: str
    title: str
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    simple: bool
    adjoint_beta: Fraction = None

    @property
    def t(self):
        """alpha + beta + gamma, the dual coxeter number for alpha = -2"""
        return self.alpha + self.beta + self.gamma


@dataclass(frozen=True)
class AdjointParams:
    hcheck: int
    beta: int
    g2_flag: bool = False


def _family_value(expr, n):
    value = sympy.sympify(expr).subs(sympy.Symbol('n'), n) if n is not None else sympy.sympify(expr)
    if not value.is_Rational:
        raise ValueError(f'parameter {expr!r} needs n')
    return rat(value)


def vogel_params(name, n=None):
    """Vogel parameters of a table entry, families 'sl', 'so', 'sp', 'sl~', 'sp-odd' need n"""
    table = load_params()['vogel']
    if name not in table:
        raise ValueError(f'unknown algebra {name!r}, expected one of {list(table)}')

    entry = table[name]
    needs_n = any('n' in str(entry[k]) for k in ('beta', 'gamma'))
    if needs_n and n is None:
        raise ValueError(f'{name} needs the parameter n')

    values = {k: _family_value(entry[k], n if needs_n else None) for k in ('alpha', 'beta', 'gamma')}
    adjoint_beta = entry.get('adjoint_beta')
    title = f"{entry['title']} (n = {n})" if needs_n else entry['title']
    return VogelParams(name, title,
                       values['alpha'], values['beta'], values['gamma'], entry['simple'],
                       parse_rational(adjoint_beta) if adjoint_beta else None)


def vogel_dim(alpha, beta, gamma):
    """(alpha - 2t)(beta - 2t)(gamma - 2t) / (alpha beta gamma), t = alpha + beta + gamma"""
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    t = alpha + beta + gamma
    if alpha * beta * gamma == 0:
        raise PoleError('vogel_dim() with a zero parameter')
    return (alpha - 2 * t) * (beta - 2 * t) * (gamma - 2 * t) / (alpha * beta * gamma)


def adjoint_params(name, n=None):
    vp = vogel_params(name, n)
    if not vp.simple:
        raise ValueError(f'{name} is not a simple lie algebra, it has no adjoint variety')
    beta = vp.adjoint_beta if vp.adjoint_beta is not None else vp.beta
    return AdjointParams(as_integer(vp.t, 'dual coxeter number'), as_integer(beta, 'beta'),
                         vp.adjoint_beta is not None)


def adjoint_dims(p):
    """(dim X_H, dim X_G, dim X_ad) = (2h - 3 - 2 beta, 2h - 3 - beta, 2h - 3)

    Args:
        p (AdjointParams): for G2 the table already holds 2 in place of beta
    """
    top = 2 * p.hcheck - 3
    return top - 2 * p.beta, top - p.beta, top


def adjoint_smoothness(name, n=None):
    """smooth iff beta = 1, excess dimension beta - 1, tangent space dimension 2h - 2 at the closed point

    Returns:
        (dict): smooth, excess, tangent_dim
    """
    p = adjoint_params(name, n)
    return {'smooth': p.beta == 1, 'excess': p.beta - 1, 'tangent_dim': 2 * p.hcheck - 2}


def root_type(name, n=None):
    """root system type string of a simple table entry"""
    if name == 'sl':
        return f'A{n - 1}'
    if name == 'sp':
        return f'C{n}'
    if name == 'so':
        if n % 2:
            return f'B{(n - 1) // 2}'
        return f'D{n // 2}'
    return name
# endregion

