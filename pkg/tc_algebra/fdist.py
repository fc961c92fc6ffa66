"""Finitely supported formal distributions and their residue n-products.

A distribution is stored by z-exponent: coefficient k means a_k z^k. The
formal delta function has infinite support and is not representable, so the
only locality available here is the trivial one, a(w) b(z) = 0.
"""
from collections import namedtuple
from fractions import Fraction
from math import comb

from tc_algebra.errors import RingMismatchError
from tc_algebra.report import check, combine


def _check_ring(left, right):
    if left.ring != right.ring:
        raise RingMismatchError(f"{left.ring!r} vs {right.ring!r}")


class _Distribution:
    __slots__ = ("_ring", "_coeffs")

    def __init__(self, ring, coeffs=None):
        self._ring = ring
        self._coeffs = {key: x for key, x in (coeffs or {}).items() if not ring.is_zero(x)}

    @property
    def ring(self):
        return self._ring

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, key):
        return self._coeffs.get(key, self._ring.zero())

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def _new(self, coeffs):
        return type(self)(self._ring, coeffs)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _check_ring(self, other)
        ring = self._ring
        coeffs = dict(self._coeffs)
        for key, x in other.items():
            coeffs[key] = ring.add(coeffs[key], x) if key in coeffs else x
        return self._new(coeffs)

    def __neg__(self):
        return self._new({key: self._ring.neg(x) for key, x in self._coeffs.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return self._new({key: self._ring.scale(x, c) for key, x in self._coeffs.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self._ring != other.ring:
            return False
        keys = set(self._coeffs) | set(other.coeffs)
        return all(self._ring.equal(self.coefficient(key), other.coefficient(key)) for key in keys)

    def __hash__(self):
        return hash((type(self).__name__, self._ring, frozenset(self._coeffs)))

    def __repr__(self):
        return f"{type(self).__name__}({self._ring!r}, {dict(sorted(self._coeffs.items()))})"


class FormalDistribution(_Distribution):
    """a(z) = sum a_k z^k."""

    __slots__ = ()

    @classmethod
    def monomial(cls, ring, k, x):
        return cls(ring, {k: x})

    def support(self):
        return sorted(self._coeffs)

    def sorted_items(self):
        return sorted(self._coeffs.items())


class BiDistribution(_Distribution):
    """x(w, z) = sum x_{j,k} w^j z^k."""

    __slots__ = ()

    def sorted_items(self):
        return sorted(self._coeffs.items())


LocalityResult = namedtuple("LocalityResult", ["local", "order", "certificate"])
LocalityResult.__doc__ = """`order` is the witness N (always 0) when local; otherwise `certificate`
is ((j, k), coefficient), the w-leading nonzero coefficient of a(w) b(z)."""


def add(a, b):
    return a + b


def scale(a, c):
    return a.scale(c)


def support_width(a):
    """max k - min k over the support, 0 for the zero distribution."""
    support = a.support()
    return support[-1] - support[0] if support else 0


def outer_product(a, b):
    """a(w) b(z): coefficient (j, k) is a_j b_k."""
    _check_ring(a, b)
    ring = a.ring
    return BiDistribution(ring, {(j, k): ring.mul(x, y) for j, x in a.items() for k, y in b.items()})


def mul_wz_power(x, n):
    """x(w, z) (w - z)^n with (w - z)^n = sum C(n, m) w^m (-z)^(n-m)."""
    if n < 0:
        raise ValueError(f"(w - z)^n needs n >= 0, got {n}")
    ring = x.ring
    coeffs = {}
    for (j, k), value in x.items():
        for m in range(n + 1):
            key = (j + m, k + n - m)
            term = ring.scale(value, comb(n, m) * (-1) ** (n - m))
            coeffs[key] = ring.add(coeffs[key], term) if key in coeffs else term
    return BiDistribution(ring, coeffs)


def residue_w(x):
    """The coefficient of w^-1."""
    return FormalDistribution(x.ring, {k: value for (j, k), value in x.items() if j == -1})


def nproduct_res(a, b, n):
    """(a_(n) b)(z) = Res_w a(w) b(z) (w - z)^n."""
    return residue_w(mul_wz_power(outer_product(a, b), n))


def derivative_z(a):
    ring = a.ring
    return FormalDistribution(ring, {k - 1: ring.scale(x, k) for k, x in a.items() if k != 0})


def leading_term(x):
    """The coefficient with the largest w-exponent, ties broken by the largest z-exponent."""
    if x.is_zero():
        return None
    key = max(x.coeffs)
    return key, x.coefficient(key)


def locality_test(a, b):
    """Local iff a(w) b(z) = 0, since multiplying by (w - z) is injective on finite data."""
    product = outer_product(a, b)
    if product.is_zero():
        return LocalityResult(True, 0, None)
    return LocalityResult(False, None, leading_term(product))


def check_mul_wz_injective(x):
    """x (w - z) keeps the w-leading coefficient of x, one w-degree up."""
    if x.is_zero():
        return check("wz-injective", mul_wz_power(x, 1).is_zero(), repr(x))
    (j, k), value = leading_term(x)
    shifted = mul_wz_power(x, 1)
    (j1, k1), value1 = leading_term(shifted)
    return check("wz-injective", (j1, k1) == (j + 1, k) and x.ring.equal(value, value1), repr(x))


def check_C2_res(a, b, n):
    """T a_(n) b = -n a_(n-1) b; at n = 0 the left side is a residue of a derivative, hence 0."""
    lhs = nproduct_res(derivative_z(a), b, n)
    rhs = nproduct_res(a, b, n - 1).scale(-n) if n >= 1 else FormalDistribution(a.ring)
    return check("C2-res", lhs == rhs, f"n={n} a={a!r} b={b!r}")


def check_C3_res(a, b, n):
    """a_(n) T b = T(a_(n) b) + n a_(n-1) b."""
    lhs = nproduct_res(a, derivative_z(b), n)
    rhs = derivative_z(nproduct_res(a, b, n))
    if n >= 1:
        rhs = rhs + nproduct_res(a, b, n - 1).scale(n)
    return check("C3-res", lhs == rhs, f"n={n} a={a!r} b={b!r}")


def check_local_products_vanish(a, b, max_n=4):
    """A local pair has a_(n) b = 0 for every n."""
    if not locality_test(a, b).local:
        return check("local-products-vanish", True, detail="pair is not local")
    return combine("local-products-vanish",
                   [check("local-products-vanish", nproduct_res(a, b, n).is_zero(), f"n={n}")
                    for n in range(max_n + 1)])


def check_bilinear(a, b, c, n, alpha=Fraction(2), beta=Fraction(-3)):
    left = nproduct_res(a.scale(alpha) + c.scale(beta), b, n)
    right = nproduct_res(a, b, n).scale(alpha) + nproduct_res(c, b, n).scale(beta)
    left_b = nproduct_res(a, b.scale(alpha) + c.scale(beta), n)
    right_b = nproduct_res(a, b, n).scale(alpha) + nproduct_res(a, c, n).scale(beta)
    return check("res-bilinear", left == right and left_b == right_b, f"n={n}")


def random_distribution(ring, rng, low=-4, high=4, max_terms=4):
    return FormalDistribution(ring, {rng.randint(low, high): ring.random_element(rng)
                                     for _ in range(rng.randint(0, max_terms))})
