from fractions import Fraction
from math import inf

import pytest
from hypothesis import given, settings

from strategies import hpolys, mat_weyls, weyl_elements
from tc_algebra import multiindex as mi
from tc_algebra import weyl
from tc_algebra.errors import DimensionMismatchError, IndexOutOfRangeError, VariableCountError
from tc_algebra.hopf import HPoly
from tc_algebra.weyl import HVector, MatWeyl, PolyMatrix, WeylElement

p1, q1 = WeylElement.p(1, 1), WeylElement.q(1, 1)


def test_canonical_commutation_relation():
    assert q1 * p1 == p1 * q1 + 1
    assert weyl.commutator(q1, p1) == 1


def test_variables_of_different_index_commute():
    p2, q1_ = WeylElement.p(2, 2), WeylElement.q(1, 2)
    assert q1_ * p2 == p2 * q1_


def test_reordering_a_square():
    # q^2 p^2 = p^2 q^2 + 4 p q + 2
    expected = WeylElement(1, {((2,), (2,)): 1, ((1,), (1,)): 4, ((0,), (0,)): 2})
    assert q1 ** 2 * p1 ** 2 == expected


def _monomials(n, degree):
    result = []
    for total in range(degree + 1):
        for key in mi.of_degree(2 * n, total):
            result.append(WeylElement.monomial(key[:n], key[n:]))
    return result


@pytest.mark.parametrize("n, size", [(1, 1), (1, 2), (2, 1)])
def test_product_agrees_with_the_canonical_representation(n, size):
    basis = [HVector.basis(alpha, j, size) for alpha in mi.monomials_up_to(n, 4) for j in range(size)]
    elements = _monomials(n, 2)
    for a in elements:
        for b in elements:
            for v in basis:
                assert weyl.check_oracle_pair(MatWeyl.scalar(a, size), MatWeyl.scalar(b, size), v)


@given(mat_weyls(1, 2), mat_weyls(1, 2))
@settings(max_examples=40)
def test_matrix_product_agrees_with_the_representation(a, b):
    for alpha in mi.monomials_up_to(1, 3):
        for j in range(2):
            assert weyl.check_oracle_pair(a, b, HVector.basis(alpha, j, 2))


@given(weyl_elements(2), weyl_elements(2), weyl_elements(2))
@settings(max_examples=50)
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_representation_of_generators():
    v = HVector.basis((2,), 0, 1)
    assert weyl.rep_apply(p1, v) == HVector(1, [HPoly.monomial((3,))])
    assert weyl.rep_apply(q1, v) == HVector(1, [HPoly.monomial((1,), 2)])


def test_representation_rejects_wrong_sizes():
    with pytest.raises(DimensionMismatchError):
        weyl.rep_apply(MatWeyl.identity(1, 2), HVector.basis((0,), 0, 3))


def test_sigma_on_a_normal_monomial():
    assert weyl.involution_sigma(p1 * q1) == -(p1 * q1) - 1


@given(weyl_elements(2), weyl_elements(2))
@settings(max_examples=50)
def test_sigma_is_an_involutive_anti_automorphism(a, b):
    sigma = weyl.involution_sigma
    assert sigma(sigma(a)) == a
    assert sigma(a * b) == sigma(b) * sigma(a)


def test_sigma_transposes_matrices():
    zero = WeylElement(1)
    a = MatWeyl(1, [[zero, p1], [zero, zero]])
    assert weyl.involution_sigma(a) == MatWeyl(1, [[zero, zero], [-p1, zero]])


def test_derivation_lowers_q_degree():
    a = WeylElement.monomial((1,), (3,), 2)
    assert weyl.weyl_derivation(a, 1) == WeylElement.monomial((1,), (2,), 6)
    with pytest.raises(IndexOutOfRangeError):
        weyl.weyl_derivation(a, 2)


@given(mat_weyls(2, 2))
@settings(max_examples=50)
def test_right_multiplication_by_p(a):
    assert weyl.check_right_p_identity(a, 1)
    assert weyl.check_right_p_identity(a, 2)


@given(hpolys(2, max_part=2))
@settings(max_examples=30)
def test_a_f_is_translation_invariant(f):
    f_in_p = weyl.weyl_from_p_poly(f)
    for alpha in mi.monomials_up_to(2, 2):
        assert weyl.check_t_invariance_a_f(f_in_p, alpha)


def test_q_adic_degree():
    assert weyl.q_adic_degree(WeylElement(1)) == inf
    assert weyl.q_adic_degree(q1 ** 2 + p1 * q1) == 1
    assert weyl.q_adic_degree(p1 + q1) == 0


def test_negative_powers_are_refused():
    with pytest.raises(ValueError):
        q1 ** -2


@given(weyl_elements(1), weyl_elements(1))
@settings(max_examples=50)
def test_q_adic_filtration_is_a_left_ideal(a, b):
    assert weyl.q_adic_degree(a * b) >= weyl.q_adic_degree(b)


def test_ideal_element_multiplies_by_Q_of_p():
    q_matrix = PolyMatrix.scalar(HPoly.variable(1, 1), 1)
    m = MatWeyl.scalar(q1, 1)
    assert weyl.ideal_element(m, q_matrix) == MatWeyl.scalar(q1 * p1, 1)


def test_p_polynomials_round_trip():
    f = HPoly.monomial((2,), Fraction(1, 3)) + 1
    assert weyl.p_poly_of(weyl.weyl_from_p_poly(f)) == f


def test_jordan_product_is_symmetric():
    assert weyl.jordan_product(p1, q1) == weyl.jordan_product(q1, p1)
    assert weyl.jordan_product(p1, q1) == p1 * q1 + Fraction(1, 2)


def test_matrix_shape_checks():
    with pytest.raises(DimensionMismatchError):
        MatWeyl(1, [[p1, q1]])
    with pytest.raises(VariableCountError):
        MatWeyl.identity(1, 2) + MatWeyl.identity(2, 2)
    with pytest.raises(DimensionMismatchError):
        MatWeyl.identity(1, 2) * MatWeyl.identity(1, 3)
