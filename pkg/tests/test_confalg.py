import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from tc_algebra import confalg, linalg
from tc_algebra import multiindex as mi
from tc_algebra.backends import make_backend
from tc_algebra.confalg import ConformalElement, EvalTable
from tc_algebra.errors import (BackendMismatchError, DimensionMismatchError, InconsistentTableError,
                               ReconstructionError, VariableCountError)
from tc_algebra.hopf import DualPoly, HPoly
from tc_algebra.weyl import MatWeyl, PolyMatrix, WeylElement

CEND = make_backend("cend", 1, 1)
CEND2 = make_backend("cend", 1, 2)


def a(backend=CEND, beta=(0,), matrix=None, gamma=None):
    return ConformalElement.basic(backend, beta=beta, matrix=matrix, gamma=gamma)


def T(k=1, n=1):
    return HPoly.monomial((k,) + (0,) * (n - 1))


def test_f_product_of_one_and_p_is_one():
    assert confalg.fproduct(a(), a(beta=(1,)), T()) == a()


def test_zeroth_and_first_products_of_one():
    assert confalg.nproduct(a(), a(), 0) == a()
    assert confalg.nproduct(a(), a(), 1).is_zero()


def test_locality_set_of_one_and_p():
    assert confalg.locality_set(a(), a(beta=(1,))) == frozenset({(0,), (1,)})
    assert confalg.check_locality_bound(a(), a(beta=(1,))).passed


def test_locality_set_of_zero_is_empty():
    assert confalg.locality_set(ConformalElement.zero(CEND), a()) == frozenset()


def test_evaluation_of_a_translated_element():
    c = confalg.haction(1, a(beta=(1,)))
    value = confalg.evaluate(c, T(2))
    assert value == MatWeyl.scalar(WeylElement.monomial((1,), (1,), -2), 1)


def test_basic_map_values_are_f_times_q_power():
    for k in range(4):
        assert confalg.eval_monomial(a(beta=(2,)), (k,)) == MatWeyl.scalar(WeylElement.monomial((2,), (k,)), 1)


def test_H_action_shifts_gamma_and_commutes():
    backend = make_backend("cend", 2, 1)
    c = ConformalElement.basic(backend, beta=(1, 0))
    assert confalg.haction(1, confalg.haction(2, c)) == ConformalElement.basic(backend, beta=(1, 0), gamma=(1, 1))
    assert confalg.check_haction_commutes(c, 1, 2)


def test_polynomial_action_extends_the_variable_action():
    h = HPoly.monomial((2,), 3) + 1
    c = a(beta=(1,))
    expected = confalg.haction(1, confalg.haction(1, c)).scale(3) + c
    assert confalg.hpoly_action(h, c) == expected


def _basics(backend, bound=2):
    elements = []
    for _, _, unit in linalg.all_units(backend.size):
        for gamma in mi.monomials_up_to(backend.n, bound):
            for beta in mi.monomials_up_to(backend.n, bound):
                elements.append(ConformalElement.basic(backend, beta=beta, matrix=unit, gamma=gamma))
    return elements


@pytest.mark.parametrize("n", range(4))
def test_C2_and_C3_on_basic_elements(n):
    elements = _basics(CEND, bound=1) + _basics(CEND2, bound=1)
    for left in elements:
        for right in elements:
            if left.backend != right.backend:
                continue
            assert confalg.check_C2(left, right, n)
            assert confalg.check_C3(left, right, n)


def test_H2_on_basic_elements():
    elements = _basics(CEND, bound=1)
    for left in elements:
        for right in elements:
            for lam in [(0,), (1,), (2,)]:
                assert confalg.check_H2(left, right, T(), lam)


def test_H0_linearity():
    elements = _basics(CEND2, bound=1)[:4]
    f, g = T(), T(2) + 1
    assert confalg.check_H0(elements[0], elements[1], elements[2], f, g)
    assert confalg.check_H0(elements[3], elements[0], elements[1], g, f)


def test_x_product_uses_the_identification():
    assert confalg.x_product(a(), a(beta=(1,)), DualPoly.t((1,))) == a()


@pytest.mark.parametrize("name, n, size", [("cend", 1, 1), ("cend", 1, 2), ("cur", 1, 2), ("cur", 2, 2)])
def test_evaluation_identity_on_random_elements(name, n, size):
    backend = make_backend(name, n, size)
    rng = random.Random(7)
    for _ in range(15):
        left = confalg.random_element(backend, rng, support=2, degree=2)
        right = confalg.random_element(backend, rng, support=2, degree=2)
        f = HPoly(n, {alpha: rng.randint(-2, 2) for alpha in mi.monomials_up_to(n, 2)})
        g = HPoly.monomial(rng.choice(mi.monomials_up_to(n, 2)))
        assert confalg.check_evaluation_identity(left, right, f, g)


@given(st.randoms(use_true_random=False), st.sampled_from(["cend", "cur"]), st.integers(1, 2))
@settings(max_examples=25, deadline=None)
def test_reconstruct_inverts_evaluation(rng, name, size):
    c = confalg.random_element(make_backend(name, 1, size), rng)
    assert confalg.check_roundtrip(c).passed


def test_reconstruct_refuses_a_value_that_is_not_translation_invariant():
    table = EvalTable(CEND, {(0,): WeylElement.q(1, 1)})
    with pytest.raises(InconsistentTableError):
        confalg.reconstruct(CEND, table)


def test_reconstruct_refuses_support_on_the_top_layer():
    table = EvalTable(CEND, {(0,): WeylElement(1), (1,): WeylElement.p(1, 1)})
    with pytest.raises(ReconstructionError):
        confalg.reconstruct(CEND, table, window=1)


def test_current_algebra_table():
    assert confalg.check_current_table(make_backend("cur", 1, 2))
    assert confalg.check_current_table(make_backend("cur", 2, 2), max_degree=1)


def test_current_backend_has_only_beta_zero():
    with pytest.raises(DimensionMismatchError):
        ConformalElement.basic(make_backend("cur", 1, 1), beta=(1,))


def test_tc_witness_reproduces_targets():
    backend = make_backend("cend", 2, 2)
    target = MatWeyl.from_scalar_matrix(linalg.matrix_unit(1, 2, 2), WeylElement.monomial((1, 0), (2, 1)))
    target = target + MatWeyl.scalar(WeylElement.p(2, 2), 2)
    assert confalg.check_tc_witness(backend, target)
    current = make_backend("cur", 1, 2)
    assert confalg.check_tc_witness(current, PolyMatrix.scalar(HPoly.monomial((3,), Fraction(1, 2)), 2))


def test_right_ideal_image_multiplies_values_by_Q():
    c = a(beta=(1,))
    q_matrix = PolyMatrix.scalar(HPoly.monomial((1,)), 1)
    image = confalg.right_ideal_image(c, q_matrix)
    for k in range(4):
        assert confalg.eval_monomial(image, (k,)) == confalg.eval_monomial(c, (k,)) * q_matrix.to_matweyl()


def test_n_products_need_one_variable():
    backend = make_backend("cend", 2, 1)
    c = ConformalElement.basic(backend)
    with pytest.raises(VariableCountError):
        confalg.nproduct(c, c, 0)


def test_elements_over_different_backends_do_not_mix():
    with pytest.raises(BackendMismatchError):
        a(CEND) + a(CEND2, matrix=linalg.identity(2))
    with pytest.raises(BackendMismatchError):
        confalg.fproduct(a(CEND), ConformalElement.basic(make_backend("cur", 1, 1)), T())


def test_coefficient_size_must_match_the_backend():
    with pytest.raises(DimensionMismatchError):
        ConformalElement(CEND, {((0,), (0,)): linalg.identity(2)})


def test_arithmetic_drops_zero_coefficients():
    c = a(beta=(1,))
    assert (c - c).is_zero()
    assert (c * 2 - c.scale(2)).is_zero()
    assert c.degT() == 0 and c.deg_p() == 1
