"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        verification suites, every check is a callable returning (expected, actual) which must be equal,
        checks are independent of each other and draw their randomness from utils.get_rng(check_id),
        so a failing check can be replayed alone with the same seed.

        suites: compalg, jordan, dims, decomp
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

import sympy

from . import config
from .compalg import (LinMap, Mat2, Octonion, RElement, Sextonion, WINNING_PRODUCT, Vec2, assoc_form,
                      build_d_null, build_d_rho, build_d_sigma, build_d_sigma_S, get_algebra, imaginary_basis,
                      is_aut_S, is_automorphism, is_derivation, is_null_plane, octo_polar, select_product,
                      E11, E12, E21, E22)
from .config import Status, Suite
from .dimform import (adjoint_dims, admissible, adjoint_params, adjoint_smoothness, dim_g, e7_vdim, exc_gk, root_type,
                      severi_vk, so12_vdim_4param, so12_vdim_w5w2, so12_vdim_w6w1, subexc_gk, subexc_v2k,
                      subexc_vk, vogel_dim, vogel_params)
from .intermediate import (AAD, chart_descriptor, chart_dimension_mismatches, get_descriptor, intermediate_gk_dim,
                           mixed_cartan_product, odd_symplectic_descriptor, odd_symplectic_gk, odd_symplectic_oracle,
                           row_plethysm_check, sl_tilde_gk, vogel_square_check)
from .jordan import (J3A, LambdaRep, WINNING_DET, Z2A, j3_cofactor, j3_det, jordan_mul, nu2, nu3, nu3_inverse,
                     gw_membership, radical_basis, secant_decompose, secant_decompose_point, select_det_variant,
                     sp2_dimension_check, sp2_membership, t_w, z2_quartic)
from .model import CheckRecord
from .rootsys import (BoundExceededError, adjoint_variety_dim, build_root_system, dual_coxeter, module_dim,
                      weyl_dim)
from .utils import get_rng, log


class SkipCheck(Exception):
    """raised inside a check that does not apply under the current settings"""


@dataclass
class Check:
    check_id: str
    description: str
    func: Callable

    def run(self):
        """run the check and wrap its outcome in a CheckRecord, exceptions become Status.error"""
        try:
            expected, actual = self.func()
        except SkipCheck as e:
            return CheckRecord(self.check_id, self.description, status=Status.skipped, error=str(e))
        except Exception as e:
            log(f'check {self.check_id} raised:', repr(e), log_level=2)
            return CheckRecord(self.check_id, self.description, status=Status.error, error=repr(e),
                               actual=f'{type(e).__name__}: {e}')

        status = Status.passed if expected == actual else Status.failed
        return CheckRecord(self.check_id, self.description, expected, actual, status)


def _samples(n=None):
    return n if n is not None else config.samples


def _random(algebra, rng):
    lo, hi = config.sample_range
    return algebra.random(rng, lo, hi)


def _random_j3(tag, rng):
    lo, hi = config.sample_range
    return J3A.random(tag, rng, lo, hi)


# region compalg suite
def _composition(tag):
    def check():
        basis = get_algebra(tag).basis()
        pairs = list(product(basis, basis))
        ok = sum((a * b).norm() == a.norm() * b.norm() for a, b in pairs)
        return len(pairs), ok
    return check


def _alternative(tag):
    def check():
        basis = get_algebra(tag).basis()
        pairs = list(product(basis, basis))
        ok = sum(x * (x * y) == (x * x) * y and (y * x) * x == y * (x * x) for x, y in pairs)
        return len(pairs), ok
    return check


def _unit(tag):
    def check():
        algebra = get_algebra(tag)
        one = algebra.one()
        return True, all(one * e == e and e * one == e for e in algebra.basis())
    return check


def _conjugation():
    rng = get_rng('compalg.octonion.conjugation')
    elements = Octonion.basis() + [_random(Octonion, rng) for _ in range(50)]
    ok = sum(a * a.conj() == Octonion.one() * a.norm() and a.conj().conj() == a for a in elements)
    return len(elements), ok


def _embedding():
    """octonion product restricted to S, third slot stays zero and agrees with the sextonion product"""
    basis = Sextonion.basis()
    ok = sum((a.to_octonion() * b.to_octonion()) == (a * b).to_octonion() for a, b in product(basis, basis))
    return len(basis) ** 2, ok


def _ideal():
    """U is a two sided ideal of S with U.U = 0"""
    basis = Sextonion.basis()
    radical = [e for e in basis if e.hermitian_part().is_zero()]
    in_u = all((a * r).hermitian_part().is_zero() and (r * a).hermitian_part().is_zero()
               for a, r in product(basis, radical))
    square = all((r * s).is_zero() for r, s in product(radical, radical))
    return (True, True), (in_u, square)


def _d_sigma():
    maps = [build_d_sigma(s) for s in RElement.basis()]
    return ([True] * 4, 4), ([is_derivation(d) for d in maps], _span_rank(maps))


def _span_rank(maps):
    """dimension of the span of linear maps"""
    rows = [[x for row in m.matrix for x in row] for m in maps]
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()


def _d_sigma_images():
    """d_sigma restricted to S has rank two, its image is a null plane of U"""
    ranks, nulls = [], []
    for s in RElement.basis():
        d = build_d_sigma_S(s)
        image = d.image()
        ranks.append(len(image))
        nulls.append(all(e.hermitian_part().is_zero() for e in image)
                     and is_null_plane(*[e.to_octonion() for e in image]))
    return ([2] * 4, [True] * 4), (ranks, nulls)


def _d_sigma_random():
    rng = get_rng('compalg.derivation.d_sigma.random')
    n = max(1, _samples() // 10)
    lo, hi = config.sample_range
    return n, sum(is_derivation(build_d_sigma(RElement.random(rng, lo, hi))) for _ in range(n))


def _d_rho():
    maps = [build_d_rho(rho) for rho in (E11, E12, E21, E22)]
    return [True] * 4, [is_derivation(d) for d in maps]


def _d_rho_random():
    rng = get_rng('compalg.derivation.d_rho.random')
    n = max(1, _samples() // 10)
    return n, sum(is_derivation(build_d_rho(_random(Mat2, rng))) for _ in range(n))


def _norm_skew():
    """q(d x, y) + q(x, d y) = 0"""
    maps = [build_d_sigma(s) for s in RElement.basis()] + [build_d_rho(r) for r in (E11, E12, E21, E22)]
    basis = Octonion.basis()
    ok = all(octo_polar(d(x), y) + octo_polar(x, d(y)) == 0 for d in maps for x, y in product(basis, basis))
    return True, ok


def _d_null():
    d = build_d_null(1)
    return (True, 2, True), (is_derivation(d), d.rank(), is_automorphism(LinMap.identity('O') + d))


def _left_multiplication():
    """left multiplication by a generic element is no derivation"""
    rng = get_rng('compalg.derivation.left_multiplication')
    a = _random(Octonion, rng)
    while a.is_zero():
        a = _random(Octonion, rng)
    return False, is_derivation(LinMap.from_function(lambda e: a * e, 'O'))


def _aut_s():
    rng = get_rng('compalg.aut_S')
    n = max(1, _samples() // 10)
    lo, hi = config.sample_range
    ok = 0
    for _ in range(n):
        m = _random(Mat2, rng)
        while m.det() == 0:
            m = _random(Mat2, rng)
        ok += is_aut_S(m, RElement.random(rng, lo, hi))
    return n, ok


def _assoc_form():
    """phi alternating and phi(u1, z, u2) = 2q(z, u1u2), phi(u1, u2, z) = -2q(z, u1u2)"""
    basis = imaginary_basis(Octonion)
    triples = list(product(basis, repeat=3))
    alternating = all(assoc_form(x, x, z) == 0 and assoc_form(x, z, z) == 0 for x, z in product(basis, basis))
    ordered = sum(assoc_form(u1, z, u2) == 2 * octo_polar(z, u1 * u2) for u1, u2, z in triples)
    stated = sum(assoc_form(u1, u2, z) == -2 * octo_polar(z, u1 * u2) for u1, u2, z in triples)
    return (True, len(triples), len(triples)), (alternating, ordered, stated)


def _null_planes():
    e1, e2 = Octonion(u=Vec2(1, 0)), Octonion(u=Vec2(0, 1))
    image = build_d_null(1).image()
    return (True, False, True), (is_null_plane(e1, e2), is_null_plane(Octonion.one(), e1), is_null_plane(*image))


def compalg_checks():
    checks = [
        Check('compalg.product.selection', 'unique product convention with unit and composition law',
              lambda: ([WINNING_PRODUCT], select_product())),
        Check('compalg.octonion.conjugation', 'a conj(a) = q(a) on basis and random octonions', _conjugation),
        Check('compalg.sextonion.embedding', 'octonion product restricted to S is the sextonion product', _embedding),
        Check('compalg.sextonion.ideal', 'U is an ideal of S with U.U = 0', _ideal),
        Check('compalg.derivation.d_sigma', 'd_sigma on the radical basis are 4 independent derivations', _d_sigma),
        Check('compalg.derivation.d_sigma.images', 'd_sigma restricted to S has rank 2 with null plane image',
              _d_sigma_images),
        Check('compalg.derivation.d_sigma.random', 'd_sigma for random radical elements', _d_sigma_random),
        Check('compalg.derivation.d_rho', 'd_rho on the gl(U) basis', _d_rho),
        Check('compalg.derivation.d_rho.random', 'd_rho for random rho', _d_rho_random),
        Check('compalg.derivation.norm_skew', 'derivations are skew for the polarized norm', _norm_skew),
        Check('compalg.derivation.d_null', 'rank two derivation with image in U, I + d is an automorphism', _d_null),
        Check('compalg.derivation.left_multiplication', 'left multiplication is no derivation',
              _left_multiplication),
        Check('compalg.aut_S.random', 'GL(U) section composed with the radical gives automorphisms of S', _aut_s),
        Check('compalg.assoc_form', 'associative 3-form identities on the imaginary basis', _assoc_form),
        Check('compalg.null_planes', 'null plane examples', _null_planes),
    ]
    for tag in ('S', 'O'):
        checks += [
            Check(f'compalg.composition.{tag}', f'q(ab) = q(a)q(b) on all basis pairs of {tag}', _composition(tag)),
            Check(f'compalg.alternative.{tag}', f'alternativity on all basis pairs of {tag}', _alternative(tag)),
            Check(f'compalg.unit.{tag}', f'two sided unit of {tag}', _unit(tag)),
        ]
    return checks
# endregion


# region jordan suite
def _cofactor_identities(tag):
    def check():
        rng = get_rng('jordan.cofactor', tag)
        n = _samples()
        identity = J3A.identity(tag)
        qq = xq = 0
        for _ in range(n):
            x = _random_j3(tag, rng)
            q, d = j3_cofactor(x), j3_det(x)
            qq += j3_cofactor(q) == x * d
            xq += jordan_mul(x, q) == identity * d
        return (n, n), (qq, xq)
    return check


def _det_selection():
    return [WINNING_DET], select_det_variant(get_rng('jordan.det.selection'))


def _radical():
    """A3(H-perp) is an ideal of J3(S) with zero square, det does not see it"""
    radical = radical_basis()
    basis = J3A.basis('S')
    square = all(jordan_mul(r, s).is_zero() for r, s in product(radical, radical))
    ideal = all(jordan_mul(x, r).is_radical() or jordan_mul(x, r).is_zero() for x, r in product(basis, radical))

    rng = get_rng('jordan.radical')
    n = _samples()
    invisible = 0
    for _ in range(n):
        x = _random_j3('S', rng)
        invisible += j3_det(x) == j3_det(x.hermitian_part())
    return (len(radical), True, True, n), (len(radical), square, ideal, invisible)


def _dims():
    return ((15, 21, 27), (32, 44, 56)), (tuple(J3A.dim_of(t) for t in 'HSO'), tuple(Z2A.dim_of(t) for t in 'HSO'))


def _nu2():
    """Q(nu2(1, y, z)) = 0, (1, y, z) generates an associative subalgebra of O"""
    rng = get_rng('jordan.nu2')
    n = _samples()
    ok = 0
    for _ in range(n):
        y, z = _random(Octonion, rng), _random(Octonion, rng)
        v = nu2(Octonion.one(), y, z)
        ok += j3_cofactor(v).is_zero() and v.diag == (1, y.norm(), z.norm())
    return n, ok


def _nu3():
    rng = get_rng('jordan.nu3')
    n = _samples()
    membership = inverse = quartic = 0
    for _ in range(n):
        x = _random_j3('S', rng)
        membership += gw_membership(nu3(x))
        inverse += gw_membership(nu3_inverse(x))
        quartic += z2_quartic(nu3(x)) == 0
    examples = (gw_membership(Z2A(Fraction(1), J3A.zero('S'), J3A.zero('S'), Fraction(0))),
                gw_membership(Z2A(Fraction(1), J3A.zero('S'), J3A.zero('S'), Fraction(1))))
    return (n, n, n, (True, False)), (membership, inverse, quartic, examples)


def _translation():
    rng = get_rng('jordan.translation')
    n = _samples()
    orbit = preserved = 0
    for _ in range(n):
        x, w = _random_j3('S', rng), _random_j3('S', rng)
        m = nu3(x)
        orbit += t_w(m, w) == nu3(x + w)
        # a point off the affine chart: scale by a random s and add an element of the orbit
        s = Fraction(rng.randint(1, 5))
        p = nu3(x * (1 / s)) * s
        preserved += gw_membership(t_w(p, w)) and t_w(p, J3A.zero('S')) == p
    return (n, n), (orbit, preserved)


def random_secant_case(rng, tag='S'):
    """(y, s, t) with a rational split, c = s t^2 / det(y) = (v + 4/v) / 2 - 2 makes c(4 + c) a square"""
    lo, hi = config.sample_range
    while True:
        y = _random_j3(tag, rng)
        dety = j3_det(y)
        t = Fraction(rng.randint(lo, hi))
        v = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((-1, 1))
        c = (v + 4 / v) / 2 - 2
        if dety == 0 or t == 0 or c == 0 or c == -4:
            continue
        return y, c * dety / (t * t), t


def _secant():
    rng = get_rng('jordan.secant')
    n = config.secant_samples
    ok = 0
    for _ in range(n):
        y, s, t = random_secant_case(rng)
        result = secant_decompose(y, s, t)
        ok += result.split and result.recombine() == Z2A(s, J3A.zero('S'), y, t)
    return n, ok


def _secant_point():
    """arbitrary points are translated to x = 0, the tangent case 2 nu3(a) gives lam = mu"""
    rng = get_rng('jordan.secant.point')
    n = max(1, config.secant_samples // 5)
    ok = 0
    for _ in range(n):
        y, s, t = random_secant_case(rng)
        w = _random_j3('S', rng)
        m = t_w(Z2A(s, J3A.zero('S'), y, t), w)
        result = secant_decompose_point(m)
        ok += result.split and result.recombine() == m

    a = _random_j3('S', rng)
    tangent = secant_decompose_point(nu3(a) * 2)
    return (n, True), (ok, tangent.on_variety and tangent.lam == tangent.mu == 1)


def _sp2():
    p = LambdaRep.from_planes([(1, 1, 2)], 6)
    examples = (sp2_membership(p),
                sp2_membership(LambdaRep.from_planes([(1, 1, 2), (1, 3, 4)], 6)),
                sp2_membership(LambdaRep.from_planes([(1, 1, 2)], 1)),
                sp2_membership(LambdaRep.from_planes([], 3)))
    return ((True, False, False, True), 12), (examples, sp2_dimension_check(p))


def jordan_checks():
    checks = [
        Check('jordan.det.selection', 'unique triple term convention of the cubic norm', _det_selection),
        Check('jordan.radical', 'A3(H-perp) is an ideal with zero square, invisible to det', _radical),
        Check('jordan.dims', 'dim J3(A) = 3 + 3a and dim Z2(A) = 6a + 8', _dims),
        Check('jordan.nu2.rank_one', 'Q(nu2(1, y, z)) = 0 over O', _nu2),
        Check('jordan.nu3.membership', 'veronese images satisfy the Z2 equations and the quartic', _nu3),
        Check('jordan.translation', 't_w maps nu3(x) to nu3(x + w) and preserves the Z2 equations', _translation),
        Check('jordan.secant.roundtrip', 'secant decomposition of rational split points', _secant),
        Check('jordan.secant.point', 'secant decomposition of translated points', _secant_point),
        Check('jordan.sp2', 'plane / hyperplane incidences and the dimension 12', _sp2),
    ]
    for tag in 'HSO':
        checks.append(Check(f'jordan.cofactor.{tag}', f'Q(Q(x)) = det(x)x and x o Q(x) = det(x)I over {tag}',
                            _cofactor_identities(tag)))
    return checks
# endregion


# region dims suite
# distinguished modules of the subexceptional and Severi series, V^(k) is their k-th mixed Cartan power
SUBEXC_MODULES = {
    Fraction(-2, 3): ('A1', [(3,)]),
    Fraction(0): ('3A1', [(1, 1, 1)]),
    Fraction(1): ('C3', [(0, 0, 1)]),
    Fraction(2): ('A5', [(0, 0, 1, 0, 0)]),
    Fraction(4): ('D6', [(0, 0, 0, 0, 0, 1)]),
    Fraction(6): ('D6', [(0, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 0)]),
    Fraction(8): ('E7', [(0, 0, 0, 0, 0, 0, 1)]),
}

SEVERI_MODULES = {
    Fraction(1): ('A2', [(2, 0)]),
    Fraction(2): ('2A2', [(1, 0, 1, 0)]),
    Fraction(4): ('A5', [(0, 1, 0, 0, 0)]),
    Fraction(6): ('A5', [(0, 1, 0, 0, 0), (0, 0, 0, 0, 1)]),
    Fraction(8): ('E6', [(1, 0, 0, 0, 0, 0)]),
}

# the four constituents of V2 for a = 6: w4, w1 + w6, w5, w2
SUBEXC_V2 = [(0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0)]


def cartan_power_dim_sum(tag, constituents, k):
    """dimension of the k-th mixed Cartan power of a sum of irreducibles"""
    rs = build_root_system(tag)
    return module_dim(rs, mixed_cartan_product([(constituents, k)]))


def _chart():
    values = (dim_g(2, 2), dim_g(4, 8), dim_g(6, 8), dim_g(8, 8), dim_g(6, 6), dim_g(1, 8))
    return ([], (16, 133, 190, 248, 144, 52)), (chart_dimension_mismatches(), values)


def _series(formula, row, a, kmax):
    def check():
        desc = chart_descriptor(row, a)
        expected = [intermediate_gk_dim(desc, k) for k in range(kmax + 1)]
        return expected, [formula(a, k) for k in range(kmax + 1)]
    return check


def _module_series(formula, modules, a, kmax):
    def check():
        tag, constituents = modules[a]
        return [cartan_power_dim_sum(tag, constituents, k) for k in range(kmax + 1)], \
            [formula(a, k) for k in range(kmax + 1)]
    return check


def _v2(kmax):
    def check():
        return [cartan_power_dim_sum('D6', SUBEXC_V2, k) for k in range(kmax + 1)], \
            [subexc_v2k(6, k) for k in range(kmax + 1)]
    return check


def _weyl_grid(tag, formula, weight, grid, arity=2):
    def check():
        rs = build_root_system(tag)
        params = list(product(range(grid + 1), repeat=arity))
        return [weyl_dim(rs, weight(*p)) for p in params], [formula(*p) for p in params]
    return check


def _odd_sp():
    pairs = [(n, k) for n in range(1, 5) for k in range(4)]
    desc = [odd_symplectic_descriptor(n).total for n in range(1, 5)]
    return ([odd_symplectic_oracle(n, k) for n, k in pairs], [n * (2 * n + 1) + 2 * n + 1 for n in range(1, 5)]), \
        ([odd_symplectic_gk(n, k) for n, k in pairs], desc)


def _sl_tilde():
    pairs = [(n, k) for n in range(2, 6) for k in range(4)]
    expected = []
    for n, k in pairs:
        rs = build_root_system('A', n)
        expected.append(weyl_dim(rs, (k,) + (0,) * (n - 2) + (k,)))
    return expected, [sl_tilde_gk(n, k) for n, k in pairs]


def _lie_dim(tag):
    rs = build_root_system(tag)
    return 2 * len(rs.positive_roots) + rs.rank


def _vogel():
    expected, actual = [], []
    for name in ('G2', 'F4', 'E6', 'E7', 'E8'):
        p = vogel_params(name)
        expected.append(_lie_dim(name))
        actual.append(vogel_dim(p.alpha, p.beta, p.gamma))
    for name, n in (('sl', 4), ('sl', 7), ('so', 8), ('so', 11), ('sp', 3)):
        p = vogel_params(name, n)
        expected.append(_lie_dim(root_type(name, n)))
        actual.append(vogel_dim(p.alpha, p.beta, p.gamma))

    p = vogel_params('e7.5')
    expected.append(get_descriptor('E_7.H_{56}').total)
    actual.append(vogel_dim(p.alpha, p.beta, p.gamma))
    for n in (1, 2, 3):
        p = vogel_params('sp-odd', n)
        expected.append(odd_symplectic_descriptor(n).total)
        actual.append(vogel_dim(p.alpha, p.beta, p.gamma))
    return expected, actual


def _adjoint():
    """(dim X_H, dim X_G, dim X_ad) for E8, dual coxeter numbers from the root systems, smoothness"""
    expected = [(33, 45, 57)]
    actual = [adjoint_dims(adjoint_params('E8'))]
    for name in ('G2', 'F4', 'E6', 'E7', 'E8'):
        rs = build_root_system(name)
        expected.append((dual_coxeter(rs), 2 * dual_coxeter(rs) - 3))
        actual.append((adjoint_params(name).hcheck, adjoint_variety_dim(rs)))
    expected.append((True, False))
    actual.append((adjoint_smoothness('sp', 3)['smooth'], adjoint_smoothness('E8')['smooth']))
    return expected, actual


def dims_checks():
    k_max = config.oracle_k_max
    checks = [
        Check('dims.chart', 'descriptor dimensions equal dim_g on the whole chart', _chart),
        Check('dims.subexc_v2k.a6', 'subexc_v2k(6, k) against the Cartan powers of w4 + (w1 + w6) + w5 + w2',
              _v2(min(k_max, 3))),
        Check('dims.e7_vdim', 'e7_vdim(i, j) against weyl_dim(E7, i w1 + j w7)',
              _weyl_grid('E7', e7_vdim, lambda i, j: (i, 0, 0, 0, 0, 0, j), config.e7_grid)),
        Check('dims.so12_vdim_w5w2', 'so12_vdim_w5w2(i, j) against weyl_dim(D6, i w2 + j w5)',
              _weyl_grid('D6', so12_vdim_w5w2, lambda i, j: (0, i, 0, 0, j, 0), config.so12_grid)),
        Check('dims.so12_vdim_w6w1', 'so12_vdim_w6w1(a, b) against weyl_dim(D6, a w6 + b w1)',
              _weyl_grid('D6', so12_vdim_w6w1, lambda a, b: (b, 0, 0, 0, 0, a), config.so12_grid)),
        Check('dims.so12_vdim_4param', 'so12_vdim_4param against weyl_dim(D6, a w4 + b(w1 + w6) + c w5 + d w2)',
              _weyl_grid('D6', so12_vdim_4param, lambda a, b, c, d: (b, d, 0, a, c, b), config.so12_4param_grid,
                         arity=4)),
        Check('dims.odd_symplectic', 'odd_symplectic_gk against sums of symmetric powers of C^2n', _odd_sp),
        Check('dims.sl_tilde', 'sl_tilde_gk(n, k) against weyl_dim(A_n, k(w1 + w_n))', _sl_tilde),
        Check('dims.vogel', 'Vogel dimension formula against the root systems', _vogel),
        Check('dims.adjoint', 'adjoint variety dimensions and smoothness', _adjoint),
    ]

    for b in admissible('chart_cols'):
        checks.append(Check(f'dims.exc_gk.a={b}', f'exc_gk({b}, k) against the Cartan powers of g(O, {b})',
                            _series(exc_gk, 8, b, k_max)))
    # A1 at b = -2/3 has no Cartan power meaning there
    for b in admissible('chart_cols')[1:]:
        checks.append(Check(f'dims.subexc_gk.a={b}', f'subexc_gk({b}, k) against the Cartan powers of g(H, {b})',
                            _series(subexc_gk, 4, b, k_max)))
    for a in SUBEXC_MODULES:
        checks.append(Check(f'dims.subexc_vk.a={a}', f'subexc_vk({a}, k) against the distinguished module',
                            _module_series(subexc_vk, SUBEXC_MODULES, a, k_max)))
    for a in SEVERI_MODULES:
        checks.append(Check(f'dims.severi_vk.a={a}', f'severi_vk({a}, k) against the distinguished module',
                            _module_series(severi_vk, SEVERI_MODULES, a, config.severi_k_max)))
    return checks
# endregion


# region decomp suite
ROW_DEGREES = {
    1: [(1, 'sym'), (2, 'sym'), (2, 'alt'), (3, 'sym')],
    2: [(1, 'sym'), (2, 'sym'), (3, 'sym')],
    3: [(1, 'sym'), (2, 'sym'), (3, 'sym')],
}


def _row(row, d, kind):
    def check():
        if d > config.max_degree:
            raise SkipCheck(f'degree {d} above max_degree {config.max_degree}')
        try:
            records = row_plethysm_check(row, d, kind)
        except BoundExceededError as e:
            raise SkipCheck(str(e))
        if any(r.get('skipped') for r in records):
            raise SkipCheck(f'row {row} has no decomposition rule in degree {d}')
        return [r['rhs'] for r in records], [r['lhs'] for r in records]
    return check


def _square(name):
    def check():
        records = vogel_square_check(get_descriptor(name))
        return [r['rhs'] for r in records], [r['lhs'] for r in records]
    return check


def decomp_checks():
    checks = []
    for row, degrees in ROW_DEGREES.items():
        for d, kind in degrees:
            checks.append(Check(f'decomp.row{row}.{kind}{d}', f'{kind}^{d} of the row {row} module against '
                                f'the row formula', _row(row, d, kind)))
    for name in AAD:
        checks.append(Check(f'decomp.square.{name}', f'square decompositions of {name}', _square(name)))
    return checks
# endregion


SUITES = {
    Suite.compalg: compalg_checks,
    Suite.jordan: jordan_checks,
    Suite.dims: dims_checks,
    Suite.decomp: decomp_checks,
}


def get_checks(suite=Suite.all):
    """list of Check objects of a suite, or of every suite for Suite.all"""
    if suite == Suite.all:
        return [c for member in Suite.members for c in SUITES[member]()]
    try:
        return SUITES[suite]()
    except KeyError:
        raise ValueError(f'unknown suite: {suite!r}, expected one of {Suite.choices}')
