from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from tc_algebra import fdist
from tc_algebra.errors import RingMismatchError
from tc_algebra.fdist import BiDistribution, FormalDistribution
from tc_algebra.rings import LaurentRing, MatrixRing, RationalRing, WeylRing

QQ = RationalRing()
RINGS = [QQ, MatrixRing(2), WeylRing(1), LaurentRing()]


def z(k, c=1, ring=QQ):
    return FormalDistribution.monomial(ring, k, Fraction(c) if ring == QQ else c)


def test_residue_products_of_poles():
    assert fdist.nproduct_res(z(-1), z(-1), 0) == z(-1)
    assert fdist.nproduct_res(z(-1), z(-1, 2), 1) == z(0, -2)


@pytest.mark.parametrize("n", range(5))
def test_non_local_products_do_not_vanish(n):
    r, s = Fraction(2), Fraction(-3)
    product = fdist.nproduct_res(z(-1, r), z(-1, s), n)
    assert product == z(n - 1, (-1) ** n * r * s)


def test_local_pair_over_matrices():
    ring = MatrixRing(2)
    e12 = ((0, 1), (0, 0))
    a = FormalDistribution(ring, {-1: e12, 2: e12})
    b = FormalDistribution(ring, {0: e12})
    result = fdist.locality_test(a, b)
    assert result.local and result.order == 0 and result.certificate is None
    assert fdist.check_local_products_vanish(a, b)


def test_certificate_is_the_leading_coefficient():
    a = z(-1) + z(2, 3)
    b = z(0, 5) + z(1)
    result = fdist.locality_test(a, b)
    assert not result.local
    assert result.certificate == ((2, 1), Fraction(3))


def test_z_derivative():
    assert fdist.derivative_z(z(3) - z(-1)) == z(2, 3) + z(-2)
    assert fdist.derivative_z(z(0, 7)).is_zero()


def test_multiplication_by_w_minus_z():
    x = BiDistribution(QQ, {(0, 0): Fraction(1)})
    assert fdist.mul_wz_power(x, 2) == BiDistribution(QQ, {(2, 0): 1, (1, 1): -2, (0, 2): 1})
    assert fdist.check_mul_wz_injective(fdist.outer_product(z(-1) + z(3), z(2)))
    assert fdist.check_mul_wz_injective(BiDistribution(QQ))


def test_negative_power_of_w_minus_z_is_refused():
    with pytest.raises(ValueError):
        fdist.mul_wz_power(BiDistribution(QQ, {(0, 0): Fraction(1)}), -1)


def test_support_width():
    assert fdist.support_width(z(-2) + z(3)) == 5
    assert fdist.support_width(FormalDistribution(QQ)) == 0


def test_rings_do_not_mix():
    with pytest.raises(RingMismatchError):
        fdist.outer_product(z(0), FormalDistribution.monomial(MatrixRing(2), 0, ((1, 0), (0, 1))))
    with pytest.raises(RingMismatchError):
        z(0) + FormalDistribution(LaurentRing())


def test_equality_compares_coefficients_in_the_ring():
    ring = MatrixRing(2)
    assert FormalDistribution(ring, {0: ((0, 0), (0, 0))}) == FormalDistribution(ring)


@pytest.mark.parametrize("ring", RINGS, ids=[repr(ring) for ring in RINGS])
@given(rng=st.randoms(use_true_random=False), n=st.integers(0, 4))
@settings(max_examples=40)
def test_residue_products_satisfy_the_translation_axioms(ring, rng, n):
    a, b, c = (fdist.random_distribution(ring, rng) for _ in range(3))
    assert fdist.check_C2_res(a, b, n)
    assert fdist.check_C3_res(a, b, n)
    assert fdist.check_bilinear(a, b, c, n)
    assert fdist.check_local_products_vanish(a, b)


@pytest.mark.parametrize("ring", RINGS, ids=[repr(ring) for ring in RINGS])
@given(rng=st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_locality_iff_product_is_zero(ring, rng):
    a, b = fdist.random_distribution(ring, rng), fdist.random_distribution(ring, rng)
    result = fdist.locality_test(a, b)
    assert result.local == fdist.outer_product(a, b).is_zero()
    if not result.local:
        key, value = result.certificate
        assert not ring.is_zero(value)
        assert all(other <= key for other in fdist.outer_product(a, b).coeffs)


def test_add_and_scale_helpers():
    assert fdist.add(z(1), z(1)) == fdist.scale(z(1), 2)
