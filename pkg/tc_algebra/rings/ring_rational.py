from fractions import Fraction

from tc_algebra.output_formatter import format_rational
from tc_algebra.rings.iring import CoeffRing


class RationalRing(CoeffRing):
    """The field of exact rationals."""

    name = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def contains(self, x):
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def scale(self, x, c):
        return Fraction(c) * x

    def from_rational(self, c):
        return Fraction(c)

    def format(self, x):
        return format_rational(x)

    def random_element(self, rng, entry_range=3):
        return Fraction(rng.randint(-entry_range, entry_range), rng.randint(1, 2))
