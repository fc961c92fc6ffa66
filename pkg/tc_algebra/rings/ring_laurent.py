from tc_algebra.laurent import LaurentPoly
from tc_algebra.output_formatter import format_laurent
from tc_algebra.rings.iring import CoeffRing


class LaurentRing(CoeffRing):
    """k[t, t^-1]."""

    name = "laurent"

    def zero(self):
        return LaurentPoly()

    def one(self):
        return LaurentPoly({0: 1})

    def contains(self, x):
        return isinstance(x, LaurentPoly)

    def scale(self, x, c):
        return x.scale(c)

    def from_rational(self, c):
        return LaurentPoly({0: c})

    def is_zero(self, x):
        return x.is_zero()

    def format(self, x):
        return format_laurent(x)

    def is_compound(self, x):
        return len(x) > 1

    def random_element(self, rng, entry_range=3):
        return LaurentPoly({rng.randint(-2, 2): rng.randint(-entry_range, entry_range)
                            for _ in range(rng.randint(1, 3))})
