"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        split composition algebras over the rationals in the model
        H = gl(U), S = gl(U) + U, O = gl(U) + U + U*, with U two dimensional.

        all three element classes share one interface (add, sub, scalar and algebra product,
        conj, norm, real, coords, basis, random) so the Jordan code can work on any of them.

        octonion basis order: E11, E12, E21, E22, e1, e2, e1*, e2*
        sextonion basis order: E11, E12, E21, E22, e1, e2
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import sympy

from .exactnum import rat


class SingularMatrixError(ValueError):
    pass


class NotImaginaryError(ValueError):
    pass


class DependentVectorsError(ValueError):
    pass


SCALARS = (int, Fraction)


def _frac_coords(coords, n):
    coords = tuple(Fraction(c) for c in coords)
    if len(coords) != n:
        raise ValueError(f'expected {n} coordinates, got {len(coords)}')
    return coords


# region linear algebra over U
@dataclass(frozen=True)
class Vec2:
    x1: Fraction = Fraction(0)
    x2: Fraction = Fraction(0)

    def __add__(self, other):
        return Vec2(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other):
        return Vec2(self.x1 - other.x1, self.x2 - other.x2)

    def __neg__(self):
        return Vec2(-self.x1, -self.x2)

    def __mul__(self, scalar):
        return Vec2(self.x1 * scalar, self.x2 * scalar)

    __rmul__ = __mul__

    def coords(self):
        return (self.x1, self.x2)

    def is_zero(self):
        return self.x1 == 0 and self.x2 == 0


@dataclass(frozen=True)
class Covec2(Vec2):
    """linear form on U, <u, u*> = u1*u1' + u2*u2'"""

    def __add__(self, other):
        return Covec2(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other):
        return Covec2(self.x1 - other.x1, self.x2 - other.x2)

    def __neg__(self):
        return Covec2(-self.x1, -self.x2)

    def __mul__(self, scalar):
        return Covec2(self.x1 * scalar, self.x2 * scalar)

    __rmul__ = __mul__


def pair(u, us):
    """evaluation <u, u*>"""
    return u.x1 * us.x1 + u.x2 * us.x2


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix [[a, b], [c, d]], also the split quaternion algebra H = gl(U)"""
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    tag = 'H'
    dim = 4

    # algebra interface
    @classmethod
    def one(cls):
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_coords(cls, coords):
        return cls(*_frac_coords(coords, 4))

    @classmethod
    def basis(cls):
        return [cls.from_coords([int(i == j) for j in range(4)]) for i in range(4)]

    @classmethod
    def random(cls, rng, lo=-5, hi=5):
        return cls.from_coords([rng.randint(lo, hi) for _ in range(4)])

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, SCALARS):
            return Mat2(self.a * other, self.b * other, self.c * other, self.d * other)
        if isinstance(other, Mat2):
            return Mat2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                        self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)
        if isinstance(other, Vec2):
            # Covec2 keeps its type, U* is acted on through transposes by the caller
            return type(other)(self.a * other.x1 + self.b * other.x2, self.c * other.x1 + self.d * other.x2)
        return NotImplemented

    def __rmul__(self, scalar):
        if isinstance(scalar, SCALARS):
            return self * scalar
        return NotImplemented

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def adj0(self):
        """X^0 = trace(X) I - X"""
        return Mat2(self.d, -self.b, -self.c, self.a)

    def transpose(self):
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse(self):
        det = self.det()
        if det == 0:
            raise SingularMatrixError(f'singular matrix: {self}')
        return self.adj0() * (Fraction(1) / det)

    def is_zero(self):
        return not any(self.coords())

    # quaternion structure
    def conj(self):
        return self.adj0()

    def norm(self):
        return self.det()

    def real(self):
        return Fraction(self.trace()) / 2


def mat_adj0(x):
    """trace(X) I - X, satisfies X X^0 = det(X) I"""
    return x.adj0()


def outer(u, us):
    """u (x) u* as the endomorphism v -> <v, u*> u"""
    return Mat2(u.x1 * us.x1, u.x1 * us.x2, u.x2 * us.x1, u.x2 * us.x2)


def bracket(x, y):
    return x * y - y * x


E11, E12, E21, E22 = Mat2.basis()
H = E11 - E22
I2 = Mat2.one()
# endregion


# region sextonions and octonions
@dataclass(frozen=True)
class Sextonion:
    x: Mat2 = Mat2()
    u: Vec2 = Vec2()

    tag = 'S'
    dim = 6

    @classmethod
    def one(cls):
        return cls(Mat2.one(), Vec2())

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_coords(cls, coords):
        c = _frac_coords(coords, 6)
        return cls(Mat2(*c[:4]), Vec2(*c[4:]))

    @classmethod
    def basis(cls):
        return [cls.from_coords([int(i == j) for j in range(6)]) for i in range(6)]

    @classmethod
    def random(cls, rng, lo=-5, hi=5):
        return cls.from_coords([rng.randint(lo, hi) for _ in range(6)])

    def coords(self):
        return self.x.coords() + self.u.coords()

    def __add__(self, other):
        return Sextonion(self.x + other.x, self.u + other.u)

    def __sub__(self, other):
        return Sextonion(self.x - other.x, self.u - other.u)

    def __neg__(self):
        return Sextonion(-self.x, -self.u)

    def __mul__(self, other):
        if isinstance(other, SCALARS):
            return Sextonion(self.x * other, self.u * other)
        if isinstance(other, Sextonion):
            return sext_mul(self, other)
        return NotImplemented

    def __rmul__(self, scalar):
        if isinstance(scalar, SCALARS):
            return self * scalar
        return NotImplemented

    def conj(self):
        return sext_conj(self)

    def norm(self):
        return sext_norm(self)

    def real(self):
        return self.x.real()

    def is_zero(self):
        return not any(self.coords())

    def to_octonion(self):
        return Octonion(self.x, self.u, Covec2())

    def hermitian_part(self):
        """projection to H = gl(U) along the radical U"""
        return Sextonion(self.x, Vec2())

    def radical_part(self):
        return Sextonion(Mat2(), self.u)


@dataclass(frozen=True)
class Octonion:
    x: Mat2 = Mat2()
    u: Vec2 = Vec2()
    us: Covec2 = Covec2()

    tag = 'O'
    dim = 8

    @classmethod
    def one(cls):
        return cls(Mat2.one(), Vec2(), Covec2())

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_coords(cls, coords):
        c = _frac_coords(coords, 8)
        return cls(Mat2(*c[:4]), Vec2(*c[4:6]), Covec2(*c[6:]))

    @classmethod
    def basis(cls):
        return [cls.from_coords([int(i == j) for j in range(8)]) for i in range(8)]

    @classmethod
    def random(cls, rng, lo=-5, hi=5):
        return cls.from_coords([rng.randint(lo, hi) for _ in range(8)])

    def coords(self):
        return self.x.coords() + self.u.coords() + self.us.coords()

    def __add__(self, other):
        return Octonion(self.x + other.x, self.u + other.u, self.us + other.us)

    def __sub__(self, other):
        return Octonion(self.x - other.x, self.u - other.u, self.us - other.us)

    def __neg__(self):
        return Octonion(-self.x, -self.u, -self.us)

    def __mul__(self, other):
        if isinstance(other, SCALARS):
            return Octonion(self.x * other, self.u * other, self.us * other)
        if isinstance(other, Octonion):
            return octo_mul(self, other)
        return NotImplemented

    def __rmul__(self, scalar):
        if isinstance(scalar, SCALARS):
            return self * scalar
        return NotImplemented

    def conj(self):
        return octo_conj(self)

    def norm(self):
        return octo_norm(self)

    def real(self):
        return octo_real(self)

    def is_zero(self):
        return not any(self.coords())


ALGEBRAS = {'H': Mat2, 'S': Sextonion, 'O': Octonion}


def get_algebra(tag):
    try:
        return ALGEBRAS[tag]
    except KeyError:
        raise ValueError(f'unknown algebra tag: {tag!r}, expected one of {list(ALGEBRAS)}')


def sext_mul(a, b):
    """(X,u)(Y,v) = (XY, X^0 v + Y u)"""
    return Sextonion(a.x * b.x, a.x.adj0() * b.u + b.x * a.u)


def sext_conj(a):
    return Sextonion(a.x.adj0(), -a.u)


def sext_norm(a):
    """degenerate norm det(X), its kernel is U"""
    return a.x.det()


def octo_mul(a, b):
    """(X,u,u*)(Y,v,v*) = (XY - 2(u(x)v*)^0 - 2 v(x)u*, X^0 v + Y u, X^t v* + (Y^0)^t u*)"""
    x = a.x * b.x - outer(a.u, b.us).adj0() * 2 - outer(b.u, a.us) * 2
    u = a.x.adj0() * b.u + b.x * a.u
    us = a.x.transpose() * b.us + b.x.adj0().transpose() * a.us
    return Octonion(x, u, us)


def octo_conj(a):
    return Octonion(a.x.adj0(), -a.u, -a.us)


def octo_norm(a):
    """q(X,u,u*) = det(X) + 2<u,u*>"""
    return a.x.det() + 2 * pair(a.u, a.us)


def octo_real(a):
    return Fraction(a.x.trace()) / 2


def octo_polar(a, b):
    """(q(a+b) - q(a) - q(b)) / 2 = Re(a conj(b))"""
    return Fraction(octo_norm(a + b) - octo_norm(a) - octo_norm(b)) / 2


def polar(a, b):
    """polarized norm for any of the three algebras"""
    return Fraction((a + b).norm() - a.norm() - b.norm()) / 2


def imaginary_basis(algebra):
    """basis of the orthogonal complement of 1 under the polarized norm"""
    elements = [e for e in algebra.basis() if e.real() == 0]
    h = algebra.from_coords((1, 0, 0, -1) + (0,) * (algebra.dim - 4))
    return [h] + elements
# endregion


# region product convention selection
_YSTAR = {
    'Yt': lambda y: y.transpose(),
    '(Y0)t': lambda y: y.adj0().transpose(),
    'Y': lambda y: y,
    'Y0': lambda y: y.adj0(),
}

WINNING_PRODUCT = 'A:(Y0)t:-'


def mul_candidates():
    """all readings of the octonion product that differ in the placement of the ^0 on the first slot,
    the matrix Y* acting on u* in the third slot and the sign of the first slot cross terms

    Returns:
        (dict): name -> product function, names are 'placement:ystar:sign'
    """
    candidates = {}
    for placement, ystar, sign in product('AB', _YSTAR, '-+'):
        s = -2 if sign == '-' else 2
        ys = _YSTAR[ystar]

        def mul(a, b, placement=placement, ys=ys, s=s):
            if placement == 'A':
                cross = outer(a.u, b.us).adj0() + outer(b.u, a.us)
            else:
                cross = outer(a.u, b.us) + outer(b.u, a.us).adj0()
            x = a.x * b.x + cross * s
            u = a.x.adj0() * b.u + b.x * a.u
            us = a.x.transpose() * b.us + ys(b.x) * a.us
            return Octonion(x, u, us)

        candidates[f'{placement}:{ystar}:{sign}'] = mul
    return candidates


def discriminating_pairs():
    e1, e2 = Octonion(u=Vec2(1, 0)), Octonion(u=Vec2(0, 1))
    f1, f2 = Octonion(us=Covec2(1, 0)), Octonion(us=Covec2(0, 1))
    o11, o12, o22 = Octonion(x=E11), Octonion(x=E12), Octonion(x=E22)
    return [(o11 + e1, o11 + f1), (o11 + f1, o11 + e1), (o22 + f1, o11 + e1), (o22 + f2, o12 + e1)]


def select_product():
    """names of the candidate products with a two sided unit and a multiplicative norm on all basis pairs
    and the discriminating pairs, exactly one is expected"""
    one = Octonion.one()
    basis = Octonion.basis()
    pairs = list(product(basis, basis)) + discriminating_pairs()

    survivors = []
    for name, mul in mul_candidates().items():
        if any(mul(one, e) != e or mul(e, one) != e for e in basis):
            continue
        if all(octo_norm(mul(a, b)) == octo_norm(a) * octo_norm(b) for a, b in pairs):
            survivors.append(name)
    return survivors
# endregion


# region linear maps
@dataclass(frozen=True)
class LinMap:
    """endomorphism of one of the algebras, columns are the images of the basis elements"""
    tag: str
    matrix: tuple

    @classmethod
    def from_function(cls, f, tag):
        algebra = get_algebra(tag)
        columns = [f(e).coords() for e in algebra.basis()]
        rows = tuple(tuple(Fraction(columns[j][i]) for j in range(algebra.dim)) for i in range(algebra.dim))
        return cls(tag, rows)

    @classmethod
    def identity(cls, tag):
        return cls.from_function(lambda e: e, tag)

    @classmethod
    def zero(cls, tag):
        return cls.from_function(lambda e: e * 0, tag)

    @property
    def algebra(self):
        return get_algebra(self.tag)

    def __call__(self, element):
        c = element.coords()
        return self.algebra.from_coords([sum(r * x for r, x in zip(row, c)) for row in self.matrix])

    def __add__(self, other):
        return LinMap(self.tag, tuple(tuple(a + b for a, b in zip(r1, r2))
                                      for r1, r2 in zip(self.matrix, other.matrix)))

    def to_sympy(self):
        return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in self.matrix])

    def rank(self):
        return self.to_sympy().rank()

    def image(self):
        """basis of the image, as algebra elements"""
        cols = self.to_sympy().columnspace()
        return [self.algebra.from_coords([rat(x) for x in col]) for col in cols]

    def is_zero(self):
        return not any(any(row) for row in self.matrix)


def is_derivation(d, algebra=None):
    """d(e_i e_j) = d(e_i) e_j + e_i d(e_j) on all basis pairs"""
    algebra = get_algebra(algebra) if isinstance(algebra, str) else (algebra or d.algebra)
    basis = algebra.basis()
    return all(d(a * b) == d(a) * b + a * d(b) for a, b in product(basis, basis))


def is_automorphism(m, algebra=None):
    """m(e_i e_j) = m(e_i) m(e_j) on all basis pairs, m invertible"""
    algebra = get_algebra(algebra) if isinstance(algebra, str) else (algebra or m.algebra)
    basis = algebra.basis()
    if m.rank() != algebra.dim:
        return False
    return all(m(a * b) == m(a) * m(b) for a, b in product(basis, basis))


def derivation_rank(d):
    return d.rank()
# endregion


# region derivations and automorphisms
@dataclass(frozen=True)
class RElement:
    """element of the radical of Aut(S), given by sigma(E12) and sigma(E21)"""
    sX: Vec2 = Vec2()
    sY: Vec2 = Vec2()

    @classmethod
    def basis(cls):
        """four elements, all of rank two on S, spanning the radical"""
        e1, e2 = Vec2(1, 0), Vec2(0, 1)
        return [cls(e1, Vec2()), cls(Vec2(), e2), cls(e1 + e2, Vec2()), cls(Vec2(), e1 + e2)]

    @classmethod
    def random(cls, rng, lo=-5, hi=5):
        return cls(Vec2(rng.randint(lo, hi), rng.randint(lo, hi)), Vec2(rng.randint(lo, hi), rng.randint(lo, hi)))

    def sigma(self, m):
        """sigma: gl(U) -> U, sigma(I) = 0 and sigma(XY) = X^0 sigma(Y) + Y sigma(X)"""
        x, y = self.sX, self.sY
        s11 = Vec2(-y.x2, x.x1)
        s22 = Vec2(y.x2, -x.x1)
        return s11 * m.a + x * m.b + y * m.c + s22 * m.d

    def sigma_dagger(self, us):
        """sigma^dagger: U* -> sl(U), trace(Y sigma^dagger(u*)) = -2 <sigma(Y), u*> for Y traceless"""
        p = -pair(self.sigma(H), us)
        q = -2 * pair(self.sigma(E21), us)
        r = -2 * pair(self.sigma(E12), us)
        return Mat2(p, q, r, -p)


def build_d_sigma(s):
    """d_sigma(X,u,u*) = (-sigma^dagger(u*), sigma(X), 0)"""
    def d(a):
        return Octonion(-s.sigma_dagger(a.us), s.sigma(a.x), Covec2())
    return LinMap.from_function(d, 'O')


def build_d_sigma_S(s):
    """restriction of d_sigma to S, (X,u) -> (0, sigma(X))"""
    return LinMap.from_function(lambda a: Sextonion(Mat2(), s.sigma(a.x)), 'S')


def build_d_rho(rho):
    """(X,u,u*) -> ([rho,X], rho u, -rho^t u*)"""
    def d(a):
        return Octonion(bracket(rho, a.x), rho * a.u, -(rho.transpose() * a.us))
    return LinMap.from_function(d, 'O')


def build_d_null(kappa):
    """rank two derivation (X,u,u*) -> (0, delta(u*), 0), delta(e1*) = kappa e2, delta(e2*) = -kappa e1"""
    kappa = Fraction(kappa)

    def d(a):
        return Octonion(Mat2(), Vec2(-kappa * a.us.x2, kappa * a.us.x1), Covec2())
    return LinMap.from_function(d, 'O')


def build_aut_S(m, s):
    """rho(X,u) = (m X m^-1, sigma(m X m^-1) + m u)"""
    m_inv = m.inverse()

    def rho(a):
        x = m * a.x * m_inv
        return Sextonion(x, s.sigma(x) + m * a.u)
    return LinMap.from_function(rho, 'S')


def is_aut_S(rho1, s):
    """True when the map built from (rho1, s) is an automorphism of S, rho1 must be invertible"""
    if rho1.det() == 0:
        raise SingularMatrixError(f'rho1 is singular: {rho1}')
    return is_automorphism(build_aut_S(rho1, s), 'S')


def linearly_independent(elements):
    m = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in e.coords()] for e in elements])
    return m.rank() == len(elements)
# endregion


# region null planes and the associative form
def is_null_plane(u1, u2):
    """True iff the plane spanned by u1, u2 multiplies to zero"""
    if not linearly_independent([u1, u2]):
        raise DependentVectorsError('is_null_plane() needs two independent vectors')
    return all((a * b).is_zero() for a, b in product((u1, u2), repeat=2))


def assoc_form(x, y, z):
    """phi(x,y,z) = Re[(xy)z - (zy)x] on imaginary elements"""
    for e in (x, y, z):
        if e.real() != 0:
            raise NotImaginaryError(f'assoc_form() expects imaginary elements, got {e}')
    return ((x * y) * z - (z * y) * x).real()
# endregion
