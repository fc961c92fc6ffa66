from fractions import Fraction

from tc_algebra import multiindex as mi
from tc_algebra.output_formatter import format_weyl
from tc_algebra.rings.iring import CoeffRing
from tc_algebra.weyl import WeylElement


class WeylRing(CoeffRing):
    """The Weyl algebra A_n, a noncommutative domain."""

    name = "weyl"

    def __init__(self, n):
        self._n = n

    def _params(self):
        return (self._n,)

    def zero(self):
        return WeylElement(self._n)

    def one(self):
        return WeylElement.constant(1, self._n)

    def contains(self, x):
        return isinstance(x, WeylElement) and x.n == self._n

    def scale(self, x, c):
        return x.scale(c)

    def from_rational(self, c):
        return WeylElement.constant(Fraction(c), self._n)

    def is_zero(self, x):
        return x.is_zero()

    def format(self, x):
        return format_weyl(x)

    def is_compound(self, x):
        return len(x) > 1

    def random_element(self, rng, entry_range=3, degree=2):
        monomials = mi.monomials_up_to(self._n, degree)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[(rng.choice(monomials), rng.choice(monomials))] = rng.randint(-entry_range, entry_range)
        return WeylElement(self._n, terms)
