"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        Hermitian 3x3 matrices J3(A) over A = H, S, O with the cubic norm, the cofactor map and the
        Jordan product, the Zorn model Z2(A) = C + J3 + J3 + C with the veronese maps, the translation
        action, the quartic invariant and the secant solver.

        the sextonionic plane is also tested in its second model, the incidence variety of
        (plane, hyperplane) pairs in a six dimensional space W, see LambdaRep.

        matrix convention:
            [[r1, c,    b   ],
             [c~, r2,   a   ],
             [b~, a~,   r3  ]]      x~ is the conjugate of x
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

import sympy

from .compalg import get_algebra, polar
from .exactnum import rat, rational_sqrt
from .utils import format_rational, log


class AlgebraMismatchError(ValueError):
    pass


class SecantError(ValueError):
    """raised by the secant solver, reason is one of 'at infinity', 'tangential quartic', 'degenerate'"""

    def __init__(self, reason, msg=''):
        self.reason = reason
        super().__init__(f'{reason}: {msg}' if msg else reason)


# region J3(A)
@dataclass(frozen=True)
class J3A:
    tag: str
    diag: tuple  # r1, r2, r3
    off: tuple  # a, b, c at positions (2,3), (1,3), (1,2)

    @property
    def algebra(self):
        return get_algebra(self.tag)

    @classmethod
    def make(cls, tag, diag=(0, 0, 0), off=None):
        algebra = get_algebra(tag)
        off = off or (algebra.zero(),) * 3
        return cls(tag, tuple(Fraction(r) for r in diag), tuple(off))

    @classmethod
    def zero(cls, tag):
        return cls.make(tag)

    @classmethod
    def identity(cls, tag):
        return cls.make(tag, (1, 1, 1))

    @classmethod
    def dim_of(cls, tag):
        return 3 + 3 * get_algebra(tag).dim

    @classmethod
    def from_coords(cls, tag, coords):
        algebra = get_algebra(tag)
        n = algebra.dim
        coords = tuple(coords)
        if len(coords) != 3 + 3 * n:
            raise ValueError(f'J3({tag}) needs {3 + 3 * n} coordinates, got {len(coords)}')
        off = tuple(algebra.from_coords(coords[3 + i * n: 3 + (i + 1) * n]) for i in range(3))
        return cls.make(tag, coords[:3], off)

    @classmethod
    def basis(cls, tag):
        dim = cls.dim_of(tag)
        return [cls.from_coords(tag, [int(i == j) for j in range(dim)]) for i in range(dim)]

    @classmethod
    def random(cls, tag, rng, lo=-5, hi=5):
        algebra = get_algebra(tag)
        diag = [rng.randint(lo, hi) for _ in range(3)]
        return cls.make(tag, diag, tuple(algebra.random(rng, lo, hi) for _ in range(3)))

    def coords(self):
        return self.diag + sum((e.coords() for e in self.off), ())

    def _check(self, other):
        if self.tag != other.tag:
            raise AlgebraMismatchError(f'J3({self.tag}) and J3({other.tag}) can not be combined')

    def __add__(self, other):
        self._check(other)
        return J3A(self.tag, tuple(r + s for r, s in zip(self.diag, other.diag)),
                   tuple(e + f for e, f in zip(self.off, other.off)))

    def __sub__(self, other):
        self._check(other)
        return J3A(self.tag, tuple(r - s for r, s in zip(self.diag, other.diag)),
                   tuple(e - f for e, f in zip(self.off, other.off)))

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return J3A(self.tag, tuple(r * scalar for r in self.diag), tuple(e * scalar for e in self.off))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords())

    def entries(self):
        """full 3x3 matrix of algebra elements, real diagonal entries embedded as multiples of 1"""
        one = self.algebra.one()
        r1, r2, r3 = self.diag
        a, b, c = self.off
        return [[one * r1, c, b],
                [c.conj(), one * r2, a],
                [b.conj(), a.conj(), one * r3]]

    # sextonion split J3(S) = J3(H) + A3(H-perp)
    def hermitian_part(self):
        if self.tag != 'S':
            return self
        return J3A(self.tag, self.diag, tuple(e.hermitian_part() for e in self.off))

    def radical_part(self):
        if self.tag != 'S':
            return J3A.zero(self.tag)
        return J3A(self.tag, (Fraction(0),) * 3, tuple(e.radical_part() for e in self.off))

    def is_radical(self):
        return self.tag == 'S' and not any(self.diag) and all(e.hermitian_part().is_zero() for e in self.off)

    def to_dict(self):
        return {'tag': self.tag, 'diag': [format_rational(r) for r in self.diag],
                'off': [[format_rational(v) for v in e.coords()] for e in self.off]}


def radical_basis():
    """basis of A3(H-perp), the Hermitian matrices with zero diagonal and off diagonal entries in U"""
    return [e for e in J3A.basis('S') if e.is_radical() and not e.is_zero()]


def _re_triple(x, y, z):
    return ((x * y) * z).real()


# triple term conventions of the cubic norm, the winner is selected by select_det_variant()
DET_VARIANTS = {
    'abc': lambda a, b, c: _re_triple(a, b, c),
    'a~bc': lambda a, b, c: _re_triple(a, b.conj(), c),
    '~abc': lambda a, b, c: _re_triple(a.conj(), b, c),
    'ab~c': lambda a, b, c: _re_triple(a, b, c.conj()),
}
WINNING_DET = 'a~bc'


def det_candidates():
    """cubic norms r1r2r3 - r1q(a) - r2q(b) - r3q(c) + 2 triple(a,b,c) for every triple term convention"""
    def make(triple):
        def det(x):
            r1, r2, r3 = x.diag
            a, b, c = x.off
            return r1 * r2 * r3 - r1 * a.norm() - r2 * b.norm() - r3 * c.norm() + 2 * triple(a, b, c)
        return det

    return {name: make(triple) for name, triple in DET_VARIANTS.items()}


def j3_det(x):
    """cubic norm, det = r1r2r3 - r1q(a) - r2q(b) - r3q(c) + 2Re(a b~ c)"""
    r1, r2, r3 = x.diag
    a, b, c = x.off
    return r1 * r2 * r3 - r1 * a.norm() - r2 * b.norm() - r3 * c.norm() + 2 * ((a * b.conj()) * c).real()


def j3_cofactor(x):
    """quadratic adjoint Q(x), the gradient of det under the trace form"""
    r1, r2, r3 = x.diag
    a, b, c = x.off
    diag = (r2 * r3 - a.norm(), r1 * r3 - b.norm(), r1 * r2 - c.norm())
    off = (c.conj() * b - a * r1, c * a - b * r2, b * a.conj() - c * r3)
    return J3A(x.tag, diag, off)


def j3_cofactor_polar(x, w):
    """Q(x, w) with Q(x + w) = Q(x) + 2Q(x, w) + Q(w)"""
    return (j3_cofactor(x + w) - j3_cofactor(x) - j3_cofactor(w)) * Fraction(1, 2)


def j3_trace(x):
    return sum(x.diag, Fraction(0))


def j3_trace_form(x, y):
    """T(x, y) = tr(x o y)"""
    x._check(y)
    diag = sum((r * s for r, s in zip(x.diag, y.diag)), Fraction(0))
    return diag + 2 * sum((polar(e, f) for e, f in zip(x.off, y.off)), Fraction(0))


def jordan_mul(x, y):
    """x o y = (xy + yx) / 2 with the matrix products expanded entrywise in A"""
    x._check(y)
    m, n = x.entries(), y.entries()
    zero = x.algebra.zero()

    def entry(i, k):
        s = zero
        for j in range(3):
            s = s + m[i][j] * n[j][k] + n[i][j] * m[j][k]
        return s * Fraction(1, 2)

    diag = []
    for i in range(3):
        e = entry(i, i)
        if e != x.algebra.one() * e.real():
            raise ArithmeticError(f'jordan_mul() non scalar diagonal entry: {e}')
        diag.append(e.real())

    return J3A(x.tag, tuple(diag), (entry(1, 2), entry(0, 2), entry(0, 1)))


def j3_cofactor_gradient(x, det_fn):
    """Q(x) defined by T(Q(x), e) = D_e det(x) for a candidate cubic norm det_fn

    needs a nondegenerate trace form, so H or O only
    """
    if x.tag == 'S':
        raise ValueError('j3_cofactor_gradient() needs a nondegenerate norm, J3(S) is degenerate')

    algebra = x.algebra
    n = algebra.dim
    basis = J3A.basis(x.tag)

    def derivative(e):
        # cubic f: f(x + e) - f(x - e) = 2 D_e f(x) + 2 f(e)
        return Fraction(det_fn(x + e) - det_fn(x - e)) / 2 - det_fn(e)

    grad = [derivative(e) for e in basis]

    gram = sympy.Matrix(n, n, lambda i, j: sympy.Rational(polar(algebra.basis()[i], algebra.basis()[j])))
    gram_inv = gram.inv()

    coords = list(grad[:3])
    for slot in range(3):
        g = sympy.Matrix([sympy.Rational(v) for v in grad[3 + slot * n: 3 + (slot + 1) * n]])
        coords.extend(rat(v) for v in gram_inv * g / 2)

    return J3A.from_coords(x.tag, coords)


def select_det_variant(rng, samples=5, tag='O'):
    """names of the triple term conventions whose gradient cofactor satisfies
    Q(Q(x)) = det(x)x and x o Q(x) = det(x)I on random samples"""
    identity = J3A.identity(tag)
    points = [J3A.random(tag, rng) for _ in range(samples)]

    winners = []
    for name, det in det_candidates().items():
        ok = True
        for x in points:
            q = j3_cofactor_gradient(x, det)
            d = det(x)
            if j3_cofactor_gradient(q, det) != x * d or jordan_mul(x, q) != identity * d:
                ok = False
                break
        if ok:
            winners.append(name)

    log('select_det_variant()>', tag, winners, log_level=3)
    return winners


def nu2(x, y, z):
    """rank one Hermitian matrix v v~ for v = (x, y, z)"""
    if not (x.tag == y.tag == z.tag):
        raise AlgebraMismatchError('nu2() arguments from different algebras')
    return J3A(x.tag, (Fraction(x.norm()), Fraction(y.norm()), Fraction(z.norm())),
               (y * z.conj(), x * z.conj(), x * y.conj()))
# endregion


# region Z2(A)
@dataclass(frozen=True)
class Z2A:
    s: Fraction
    x: J3A
    y: J3A
    t: Fraction

    @property
    def tag(self):
        return self.x.tag

    @classmethod
    def dim_of(cls, tag):
        return 2 + 2 * J3A.dim_of(tag)

    def __add__(self, other):
        return Z2A(self.s + other.s, self.x + other.x, self.y + other.y, self.t + other.t)

    def __sub__(self, other):
        return Z2A(self.s - other.s, self.x - other.x, self.y - other.y, self.t - other.t)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Z2A(self.s * scalar, self.x * scalar, self.y * scalar, self.t * scalar)

    __rmul__ = __mul__

    def is_zero(self):
        return self.s == 0 and self.t == 0 and self.x.is_zero() and self.y.is_zero()

    def to_dict(self):
        return {'s': format_rational(self.s), 'x': self.x.to_dict(), 'y': self.y.to_dict(),
                't': format_rational(self.t)}


def nu3(x):
    """cubic veronese map x -> (1, x, Q(x), det(x))"""
    return Z2A(Fraction(1), x, j3_cofactor(x), Fraction(j3_det(x)))


def nu3_inverse(x):
    """(det(x), Q(x), x, 1), the point of x^-1 up to scale"""
    return Z2A(Fraction(j3_det(x)), j3_cofactor(x), x, Fraction(1))


def gw_membership(m):
    """Q(x) = sy, Q(y) = tx and x o y = st I, the equations of the sextonionic grassmannian"""
    if m.tag != 'S':
        raise AlgebraMismatchError(f'gw_membership() is defined on Z2(S), got Z2({m.tag})')
    s, x, y, t = m.s, m.x, m.y, m.t
    return (j3_cofactor(x) == y * s
            and j3_cofactor(y) == x * t
            and jordan_mul(x, y) == J3A.identity(m.tag) * (s * t))


def t_w(m, w):
    """translation (s, x, y, t) -> (s, x + sw, y + 2Q(x,w) + sQ(w), t + T(y,w) + T(x,Q(w)) + s det(w))"""
    if m.tag != w.tag:
        raise AlgebraMismatchError(f'Z2({m.tag}) translated by J3({w.tag})')
    s, x, y, t = m.s, m.x, m.y, m.t
    qw = j3_cofactor(w)
    return Z2A(s,
               x + w * s,
               y + j3_cofactor_polar(x, w) * 2 + qw * s,
               t + j3_trace_form(y, w) + j3_trace_form(x, qw) + s * j3_det(w))


def z2_quartic(m):
    """quartic invariant (st - T(x,y))^2 + 4s det(y) + 4t det(x) - 4T(Q(x), Q(y)), zero on the veronese image"""
    s, x, y, t = m.s, m.x, m.y, m.t
    return ((s * t - j3_trace_form(x, y)) ** 2 + 4 * s * j3_det(y) + 4 * t * j3_det(x)
            - 4 * j3_trace_form(j3_cofactor(x), j3_cofactor(y)))


@dataclass
class SecantResult:
    """m = lam nu3(a) + mu nu3(b)

    quadratic holds the coefficients (1, p, q) of lam^2 + p lam + q, when its roots are irrational
    split is False and lam, mu, a, b stay None
    """
    quadratic: tuple
    split: bool = False
    on_variety: bool = False
    lam: Fraction = None
    mu: Fraction = None
    a: J3A = None
    b: J3A = None
    notes: list = field(default_factory=list)

    def recombine(self):
        return nu3(self.a) * self.lam + nu3(self.b) * self.mu


def secant_decompose(y, s, t):
    """solve (s, 0, y, t) = lam nu3(a) + mu nu3(b) with lam + mu = s and b = -(lam/mu) a

    lam, mu are the roots of lam^2 - s lam + s^2/(4 + c) with c = s t^2 / det(y)
    """
    s, t = Fraction(s), Fraction(t)
    if s == 0:
        raise SecantError('at infinity', 's = 0')

    dety = j3_det(y)
    if dety == 0 or t == 0:
        raise SecantError('degenerate', f'det(y) = {dety}, t = {t}')

    c = s * t * t / dety
    if c == -4:
        raise SecantError('tangential quartic', 'the point lies on the tangent variety')

    quadratic = (Fraction(1), -s, s * s / (4 + c))
    root = rational_sqrt(c * (4 + c))
    if root is None:
        log('secant_decompose()> irrational split, c =', c, log_level=3)
        return SecantResult(quadratic)

    # discriminant s^2 c / (4 + c) = (s root / (4 + c))^2
    lam = (s + s * root / (4 + c)) / 2
    mu = s - lam
    qy = j3_cofactor(y) * (1 / (s * t))
    a = qy * ((mu - lam) / lam)
    b = qy * ((lam - mu) / mu)

    result = SecantResult(quadratic, True, lam=lam, mu=mu, a=a, b=b)
    expected = Z2A(s, J3A.zero(y.tag), y, t)
    if result.recombine() != expected:
        raise ArithmeticError('secant_decompose() recombination mismatch')
    return result


def secant_decompose_point(m):
    """secant_decompose() for an arbitrary point, translated to x = 0 first and back afterwards"""
    if m.s == 0:
        raise SecantError('at infinity', 's = 0')

    shift = m.x * (1 / m.s)
    moved = t_w(m, -shift)

    if moved.y.is_zero() and moved.t == 0:
        # the point is s nu3(x/s) itself
        half = m.s / 2
        return SecantResult((Fraction(1), -m.s, half * half), True, True, half, half, shift, shift)

    result = secant_decompose(moved.y, moved.s, moved.t)
    if result.split:
        result.a = result.a + shift
        result.b = result.b + shift
        if result.recombine() != m:
            raise ArithmeticError('secant_decompose_point() recombination mismatch')
    return result
# endregion


# region sextonionic plane as plane / hyperplane incidences
PLUCKER_INDEX = list(combinations(range(6), 2))


@dataclass(frozen=True)
class LambdaRep:
    """(omega, h) in Lambda^2 W + W*, omega in plucker coordinates e_i^e_j, i < j lexicographic"""
    omega: tuple
    h: tuple

    def __post_init__(self):
        if len(self.omega) != 15 or len(self.h) != 6:
            raise ValueError('LambdaRep needs 15 plucker coordinates and 6 coordinates of h')

    @classmethod
    def from_planes(cls, terms, h):
        """terms: list of (coefficient, i, j) with 1 based indices, h: 1 based index of a dual basis vector or a 6-tuple"""
        omega = [Fraction(0)] * 15
        for coef, i, j in terms:
            sign = 1 if i < j else -1
            omega[PLUCKER_INDEX.index(tuple(sorted((i - 1, j - 1))))] += sign * Fraction(coef)
        if isinstance(h, int):
            h = tuple(int(k == h - 1) for k in range(6))
        return cls(tuple(omega), tuple(Fraction(v) for v in h))

    def is_zero(self):
        return not any(self.omega) and not any(self.h)

    def to_dict(self):
        return {'omega': [format_rational(v) for v in self.omega], 'h': [format_rational(v) for v in self.h]}

    def omega_matrix(self):
        m = [[0] * 6 for _ in range(6)]
        for value, (i, j) in zip(self.omega, PLUCKER_INDEX):
            m[i][j], m[j][i] = value, -value
        return m


def _plucker_relations(w):
    """coefficients of omega ^ omega on e_i^e_j^e_k^e_l, i < j < k < l"""
    return [w[i][j] * w[k][l] - w[i][k] * w[j][l] + w[i][l] * w[j][k]
            for i, j, k, l in combinations(range(6), 4)]


def _contraction(w, h):
    """(i_h omega)_i = sum_j h_j omega_ji"""
    return [sum(h[j] * w[j][i] for j in range(6)) for i in range(6)]


def sp2_membership(p):
    """omega ^ omega = 0 and i_h omega = 0, i.e. omega is a plane inside the hyperplane ker h"""
    if p.is_zero():
        raise ValueError('sp2_membership() zero point')
    w = p.omega_matrix()
    return not any(_plucker_relations(w)) and not any(_contraction(w, p.h))


def sp2_dimension_check(p=None):
    """projective dimension of the incidence variety at a point, from the rank of the jacobian

    the default point (e1^e2, e6*) is smooth, the expected value is 8 + 4 = 12
    """
    p = p or LambdaRep.from_planes([(1, 1, 2)], 6)
    omega_syms = sympy.symbols('w0:15')
    h_syms = sympy.symbols('h0:6')
    w = LambdaRep(tuple(omega_syms), tuple(h_syms)).omega_matrix()
    equations = _plucker_relations(w) + _contraction(w, h_syms)

    variables = list(omega_syms) + list(h_syms)
    jacobian = sympy.Matrix(equations).jacobian(variables)
    point = dict(zip(variables, [sympy.Rational(rat(v)) for v in p.omega + p.h]))
    rank = jacobian.subs(point).rank()

    # affine cone dimension minus one
    return len(variables) - rank - 1
# endregion
