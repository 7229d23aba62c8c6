from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from magicchart.compalg import Octonion
from magicchart.jordan import (AlgebraMismatchError, J3A, LambdaRep, SecantError, WINNING_DET, Z2A, gw_membership,
                               j3_cofactor, j3_cofactor_gradient, j3_cofactor_polar, j3_det, j3_trace, j3_trace_form,
                               jordan_mul, nu2, nu3, nu3_inverse, radical_basis, secant_decompose, secant_decompose_point,
                               select_det_variant, sp2_dimension_check, sp2_membership, t_w, z2_quartic)
from magicchart.utils import get_rng
from magicchart.verify import random_secant_case

small = st.integers(-4, 4)


def j3(tag):
    return st.lists(small, min_size=J3A.dim_of(tag), max_size=J3A.dim_of(tag)).map(
        lambda coords: J3A.from_coords(tag, coords))


def test_dimensions():
    assert [J3A.dim_of(t) for t in 'HSO'] == [15, 21, 27]
    assert [Z2A.dim_of(t) for t in 'HSO'] == [32, 44, 56]
    assert len(J3A.basis('S')) == 21


def test_from_coords_length():
    with pytest.raises(ValueError):
        J3A.from_coords('O', range(26))


def test_mixed_algebras_raise():
    with pytest.raises(AlgebraMismatchError):
        J3A.zero('S') + J3A.zero('O')
    with pytest.raises(AlgebraMismatchError):
        t_w(nu3(J3A.zero('S')), J3A.zero('O'))


# region cubic norm and cofactor
@pytest.mark.parametrize('tag', ['H', 'S', 'O'])
def test_identity(tag):
    identity = J3A.identity(tag)
    assert j3_det(identity) == 1
    assert j3_cofactor(identity) == identity
    assert j3_trace(identity) == 3


@given(j3('H'))
def test_cofactor_identities_over_h(x):
    q, d = j3_cofactor(x), j3_det(x)
    assert j3_cofactor(q) == x * d
    assert jordan_mul(x, q) == J3A.identity('H') * d


@given(j3('S'))
def test_cofactor_identities_over_s(x):
    q, d = j3_cofactor(x), j3_det(x)
    assert j3_cofactor(q) == x * d
    assert jordan_mul(x, q) == J3A.identity('S') * d


@given(j3('O'))
def test_cofactor_identities_over_o(x):
    q, d = j3_cofactor(x), j3_det(x)
    assert j3_cofactor(q) == x * d
    assert jordan_mul(x, q) == J3A.identity('O') * d


@given(j3('O'), j3('O'))
def test_jordan_product_is_commutative(x, y):
    assert jordan_mul(x, y) == jordan_mul(y, x)
    assert j3_trace_form(x, y) == j3_trace(jordan_mul(x, y))


@given(j3('S'), j3('S'))
def test_cofactor_polarization(x, w):
    assert j3_cofactor_polar(x, x) == j3_cofactor(x)
    assert j3_cofactor_polar(x, w) == j3_cofactor_polar(w, x)
    # euler identity for the cubic norm
    assert j3_trace_form(j3_cofactor(x), x) == 3 * j3_det(x)


@pytest.mark.parametrize('tag', ['H', 'O'])
def test_cofactor_is_the_gradient_of_det(tag):
    rng = get_rng('test.gradient', tag)
    for _ in range(3):
        x = J3A.random(tag, rng)
        assert j3_cofactor_gradient(x, j3_det) == j3_cofactor(x)


def test_gradient_needs_nondegenerate_norm():
    with pytest.raises(ValueError):
        j3_cofactor_gradient(J3A.identity('S'), j3_det)


def test_triple_term_selection():
    assert select_det_variant(get_rng('test.det'), samples=3) == [WINNING_DET]
# endregion


# region sextonionic radical
def test_radical_basis_squares_to_zero():
    radical = radical_basis()
    assert len(radical) == 6
    for r in radical:
        for s in radical:
            assert jordan_mul(r, s).is_zero()


@given(j3('S'))
def test_det_does_not_see_the_radical(x):
    assert j3_det(x) == j3_det(x.hermitian_part())
    assert x.hermitian_part() + x.radical_part() == x
# endregion


# region Z2(A)
@given(st.lists(st.integers(-5, 5), min_size=16, max_size=16))
def test_nu2_is_rank_one(coords):
    y, z = Octonion.from_coords(coords[:8]), Octonion.from_coords(coords[8:])
    v = nu2(Octonion.one(), y, z)
    assert j3_cofactor(v).is_zero()
    assert v.diag == (1, y.norm(), z.norm())


@given(j3('S'))
def test_nu3_lies_on_the_variety(x):
    assert gw_membership(nu3(x))
    assert gw_membership(nu3_inverse(x))
    assert z2_quartic(nu3(x)) == 0


def test_membership_examples():
    zero = J3A.zero('S')
    assert gw_membership(Z2A(Fraction(1), zero, zero, Fraction(0)))
    assert not gw_membership(Z2A(Fraction(1), zero, zero, Fraction(1)))


@pytest.mark.parametrize('tag', ['H', 'O'])
def test_membership_is_sextonionic(tag):
    with pytest.raises(AlgebraMismatchError):
        gw_membership(nu3(J3A.identity(tag)))


@given(small, j3('S'), j3('S'), small, j3('S'), j3('S'))
def test_translations_compose(s, x, y, t, w1, w2):
    m = Z2A(Fraction(s), x, y, Fraction(t))
    assert t_w(t_w(m, w1), w2) == t_w(m, w1 + w2)


@given(j3('S'), j3('S'))
def test_translation_moves_along_the_veronese(x, w):
    assert t_w(nu3(x), w) == nu3(x + w)
    assert t_w(nu3(x), J3A.zero('S')) == nu3(x)


def test_quartic_on_the_tangent_case():
    point = Z2A(Fraction(-4), J3A.zero('S'), J3A.identity('S'), Fraction(1))
    assert z2_quartic(point) == 0
    # s^2 t^2 + 4 s det(y) otherwise
    assert z2_quartic(Z2A(Fraction(1), J3A.zero('S'), J3A.identity('S'), Fraction(1))) == 5


def test_to_dict():
    d = nu3(J3A.identity('H')).to_dict()
    assert d['s'] == '1' and d['t'] == '1'
    assert d['x'] == {'tag': 'H', 'diag': ['1', '1', '1'], 'off': [['0', '0', '0', '0']] * 3}
    p = LambdaRep.from_planes([(Fraction(1, 2), 2, 1)], 6).to_dict()
    assert p['omega'][0] == '-1/2' and p['h'][5] == '1'
# endregion


# region secant solver
def test_secant_rational_split():
    y = J3A.identity('S')
    # c = s t^2 / det(y) = 1/2, c(4 + c) = 9/4
    result = secant_decompose(y, Fraction(1, 2), 1)
    assert result.split
    assert result.lam + result.mu == Fraction(1, 2)
    assert result.recombine() == Z2A(Fraction(1, 2), J3A.zero('S'), y, Fraction(1))


def test_secant_irrational_split():
    result = secant_decompose(J3A.identity('S'), 1, 1)
    assert not result.split
    assert result.quadratic == (1, -1, Fraction(1, 5))


@pytest.mark.parametrize('y, s, t, reason', [
    (J3A.identity('S'), 0, 1, 'at infinity'),
    (J3A.zero('S'), 1, 1, 'degenerate'),
    (J3A.identity('S'), 1, 0, 'degenerate'),
    (J3A.identity('S'), -4, 1, 'tangential quartic'),
])
def test_secant_errors(y, s, t, reason):
    with pytest.raises(SecantError) as e:
        secant_decompose(y, s, t)
    assert e.value.reason == reason


def test_secant_random_cases():
    rng = get_rng('test.secant')
    for _ in range(10):
        y, s, t = random_secant_case(rng)
        result = secant_decompose(y, s, t)
        assert result.split
        assert result.recombine() == Z2A(s, J3A.zero('S'), y, t)


def test_secant_translated_point():
    rng = get_rng('test.secant.point')
    y, s, t = random_secant_case(rng)
    w = J3A.random('S', rng)
    m = t_w(Z2A(s, J3A.zero('S'), y, t), w)
    result = secant_decompose_point(m)
    assert result.split
    assert result.recombine() == m


def test_secant_point_on_the_variety():
    a = J3A.random('S', get_rng('test.tangent'))
    result = secant_decompose_point(nu3(a) * 2)
    assert result.on_variety
    assert result.lam == result.mu == 1
    with pytest.raises(SecantError):
        secant_decompose_point(Z2A(Fraction(0), a, a, Fraction(1)))
# endregion


# region plane / hyperplane model
def test_sp2_membership():
    assert sp2_membership(LambdaRep.from_planes([(1, 1, 2)], 6))
    # e1^e2 + e3^e4 is no plane
    assert not sp2_membership(LambdaRep.from_planes([(1, 1, 2), (1, 3, 4)], 6))
    # plane not inside the hyperplane
    assert not sp2_membership(LambdaRep.from_planes([(1, 1, 2)], 1))
    assert sp2_membership(LambdaRep.from_planes([], 3))
    with pytest.raises(ValueError):
        sp2_membership(LambdaRep.from_planes([], (0,) * 6))


def test_plucker_sign_convention():
    p = LambdaRep.from_planes([(1, 2, 1)], 6)
    q = LambdaRep.from_planes([(-1, 1, 2)], 6)
    assert p == q


def test_lambda_rep_lengths():
    with pytest.raises(ValueError):
        LambdaRep((0,) * 14, (0,) * 6)


def test_sp2_dimension():
    assert sp2_dimension_check() == 12
# endregion
