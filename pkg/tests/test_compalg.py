from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from magicchart.compalg import (E11, E12, E21, E22, H, Covec2, DependentVectorsError, LinMap, Mat2,
                                NotImaginaryError, Octonion, RElement, Sextonion, SingularMatrixError, Vec2,
                                WINNING_PRODUCT, assoc_form, build_aut_S, build_d_null, build_d_rho, build_d_sigma,
                                build_d_sigma_S, derivation_rank, get_algebra, imaginary_basis, is_aut_S,
                                is_automorphism, is_derivation, is_null_plane, mul_candidates, octo_norm, octo_polar,
                                octo_conj, octo_mul, octo_real, polar, mat_adj0, select_product, sext_conj, sext_mul)

small = st.integers(-5, 5)


def octonions():
    return st.lists(small, min_size=8, max_size=8).map(Octonion.from_coords)


def sextonions():
    return st.lists(small, min_size=6, max_size=6).map(Sextonion.from_coords)


def matrices():
    return st.lists(small, min_size=4, max_size=4).map(Mat2.from_coords)


def radical_elements():
    return st.lists(small, min_size=4, max_size=4).map(lambda c: RElement(Vec2(c[0], c[1]), Vec2(c[2], c[3])))


# region basis level checks
@pytest.mark.parametrize('tag', ['H', 'S', 'O'])
def test_composition_on_all_basis_pairs(tag):
    basis = get_algebra(tag).basis()
    for a, b in product(basis, basis):
        assert (a * b).norm() == a.norm() * b.norm()


@pytest.mark.parametrize('tag', ['S', 'O'])
def test_alternativity_on_all_basis_pairs(tag):
    basis = get_algebra(tag).basis()
    for x, y in product(basis, basis):
        assert x * (x * y) == (x * x) * y
        assert (y * x) * x == y * (x * x)


def test_octonions_are_not_associative():
    e1, f1 = Octonion(u=Vec2(1, 0)), Octonion(us=Covec2(1, 0))
    o12 = Octonion(x=E12)
    assert (e1 * f1) * o12 != e1 * (f1 * o12) or (o12 * e1) * f1 != o12 * (e1 * f1)


def test_unique_product_convention():
    assert len(mul_candidates()) == 16
    assert select_product() == [WINNING_PRODUCT]


def test_winning_candidate_is_the_product():
    mul = mul_candidates()[WINNING_PRODUCT]
    basis = Octonion.basis()
    assert all(mul(a, b) == a * b for a, b in product(basis, basis))
# endregion


# region random elements
@given(octonions(), octonions())
def test_octonion_norm_is_multiplicative(a, b):
    assert octo_norm(a * b) == octo_norm(a) * octo_norm(b)


@given(octonions(), octonions())
def test_octonion_moufang_flexible(x, y):
    assert (x * y) * x == x * (y * x)


@given(octonions())
def test_octonion_conjugate(a):
    assert a * a.conj() == Octonion.one() * a.norm()
    assert a.conj() * a == Octonion.one() * a.norm()
    assert octo_mul(a, octo_conj(a)) == a * a.conj()
    assert octo_real(a) == (a + a.conj()).x.a / 2


@given(octonions(), octonions())
def test_polarization(a, b):
    assert octo_polar(a, b) == (a * b.conj()).real()
    assert polar(a, b) == octo_polar(a, b)


@given(sextonions(), sextonions())
def test_sextonion_embeds_in_octonions(a, b):
    assert (a * b).to_octonion() == a.to_octonion() * b.to_octonion()
    assert (a * b).norm() == a.norm() * b.norm()
    assert sext_mul(a, b).to_octonion() == octo_mul(a.to_octonion(), b.to_octonion())


@given(sextonions())
def test_sextonion_conjugate(a):
    assert sext_mul(a, sext_conj(a)) == Sextonion.one() * a.norm()
    assert sext_conj(a).to_octonion() == octo_conj(a.to_octonion())


@given(sextonions())
def test_sextonion_radical_is_norm_kernel(a):
    r = a.radical_part()
    assert r.norm() == 0
    assert (r * r).is_zero()
    assert a.hermitian_part() + r == a
# endregion


# region gl(U)
def test_mat2_inverse():
    m = Mat2.from_coords((2, 1, 1, 1))
    assert m * m.inverse() == Mat2.one()
    with pytest.raises(SingularMatrixError):
        Mat2.from_coords((1, 2, 2, 4)).inverse()


@given(matrices())
def test_adj0_gives_determinant(x):
    assert x * mat_adj0(x) == Mat2.one() * x.det()
    assert mat_adj0(x) + x == Mat2.one() * x.trace()
# endregion


# region derivations
def test_d_sigma_basis_are_derivations():
    for s in RElement.basis():
        d = build_d_sigma(s)
        assert is_derivation(d)
        assert derivation_rank(build_d_sigma_S(s)) == 2


@given(radical_elements())
def test_d_sigma_random(s):
    assert is_derivation(build_d_sigma(s))


def test_sigma_is_a_cocycle():
    s = RElement(Vec2(1, 2), Vec2(-1, 3))
    for x, y in product((E11, E12, E21, E22), repeat=2):
        assert s.sigma(x * y) == x.adj0() * s.sigma(y) + y * s.sigma(x)
    assert s.sigma(Mat2.one()).is_zero()


@given(matrices())
def test_d_rho(rho):
    assert is_derivation(build_d_rho(rho))


def test_d_null():
    d = build_d_null(Fraction(3, 2))
    assert is_derivation(d)
    assert d.rank() == 2
    assert is_automorphism(LinMap.identity('O') + build_d_null(1))
    image = d.image()
    assert all(e.x.is_zero() and e.us.is_zero() for e in image)


def test_left_multiplication_is_not_a_derivation():
    a = Octonion(x=H)
    assert not is_derivation(LinMap.from_function(lambda e: a * e, 'O'))


def test_derivations_are_skew():
    basis = Octonion.basis()
    for d in (build_d_sigma(RElement.basis()[0]), build_d_rho(E12)):
        for x, y in product(basis, basis):
            assert octo_polar(d(x), y) + octo_polar(x, d(y)) == 0
# endregion


# region automorphisms of S
@given(matrices(), radical_elements())
def test_aut_S(m, s):
    if m.det() == 0:
        with pytest.raises(SingularMatrixError):
            is_aut_S(m, s)
    else:
        assert is_aut_S(m, s)


def test_aut_S_needs_conjugated_argument_of_sigma():
    m = Mat2.from_coords((2, 1, 1, 1))
    s = RElement(Vec2(1, 0), Vec2(0, 1))
    m_inv = m.inverse()
    wrong = LinMap.from_function(lambda a: Sextonion(m * a.x * m_inv, s.sigma(a.x) + m * a.u), 'S')
    assert is_automorphism(build_aut_S(m, s), 'S')
    assert not is_automorphism(wrong, 'S')
# endregion


# region null planes and the associative form
def test_null_planes():
    e1, e2 = Octonion(u=Vec2(1, 0)), Octonion(u=Vec2(0, 1))
    assert is_null_plane(e1, e2)
    assert not is_null_plane(Octonion.one(), e1)
    with pytest.raises(DependentVectorsError):
        is_null_plane(e1, e1 * 2)


def test_assoc_form_on_imaginary_basis():
    basis = imaginary_basis(Octonion)
    assert len(basis) == 7
    for u1, u2, z in product(basis, repeat=3):
        assert assoc_form(u1, z, u2) == 2 * octo_polar(z, u1 * u2)
        assert assoc_form(u1, u2, z) == -2 * octo_polar(z, u1 * u2)


def test_assoc_form_example():
    e1, f1 = Octonion(u=Vec2(1, 0)), Octonion(us=Covec2(1, 0))
    assert assoc_form(e1, Octonion(x=H), f1) == -2


def test_assoc_form_needs_imaginary_arguments():
    e1 = Octonion(u=Vec2(1, 0))
    with pytest.raises(NotImaginaryError):
        assoc_form(Octonion.one(), e1, e1)
# endregion
