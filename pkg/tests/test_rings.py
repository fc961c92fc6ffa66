from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from tc_algebra.laurent import LaurentPoly
from tc_algebra.rings import LaurentRing, MatrixRing, RationalRing, WeylRing, make_ring
from tc_algebra.weyl import WeylElement

RINGS = [RationalRing(), MatrixRing(2), WeylRing(1), WeylRing(2), LaurentRing()]
ring_ids = [repr(ring) for ring in RINGS]


@pytest.mark.parametrize("ring", RINGS, ids=ring_ids)
@given(rng=st.randoms(use_true_random=False))
@settings(max_examples=30)
def test_ring_axioms(ring, rng):
    x, y, z = (ring.random_element(rng) for _ in range(3))
    assert ring.contains(x)
    assert ring.equal(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z)))
    assert ring.equal(ring.mul(x, ring.add(y, z)), ring.add(ring.mul(x, y), ring.mul(x, z)))
    assert ring.equal(ring.mul(ring.add(x, y), z), ring.add(ring.mul(x, z), ring.mul(y, z)))
    assert ring.equal(ring.add(x, y), ring.add(y, x))
    assert ring.equal(ring.mul(ring.one(), x), x)
    assert ring.equal(ring.mul(x, ring.one()), x)
    assert ring.is_zero(ring.add(x, ring.neg(x)))
    assert ring.equal(ring.scale(x, Fraction(1, 2)), ring.mul(ring.from_rational(Fraction(1, 2)), x))


def test_make_ring_by_name():
    assert make_ring("rational") == RationalRing()
    assert make_ring("matrix", size=3) == MatrixRing(3)
    assert make_ring("weyl", n=2) == WeylRing(2)
    assert make_ring("laurent") == LaurentRing()
    assert MatrixRing(2) != MatrixRing(3)
    with pytest.raises(ValueError):
        make_ring("octonion")


def test_matrix_ring_has_zero_divisors():
    ring = MatrixRing(2)
    e12 = ((0, 1), (0, 0))
    assert ring.is_zero(ring.mul(e12, e12))


def test_weyl_ring_is_noncommutative():
    ring = WeylRing(1)
    p, q = WeylElement.p(1, 1), WeylElement.q(1, 1)
    assert not ring.equal(ring.mul(q, p), ring.mul(p, q))


def test_laurent_powers():
    t = LaurentPoly.monomial(1)
    assert (t + 1) ** 2 == LaurentPoly({2: 1, 1: 2, 0: 1})
    assert LaurentPoly.monomial(2, 3) ** -1 == LaurentPoly({-2: Fraction(1, 3)})
    with pytest.raises(ValueError):
        (t + 1) ** -1
