from fractions import Fraction

from tc_algebra import linalg
from tc_algebra.output_formatter import format_matrix
from tc_algebra.rings.iring import CoeffRing


class MatrixRing(CoeffRing):
    """N x N rational matrices; has zero divisors, so local pairs exist."""

    name = "matrix"

    def __init__(self, size):
        self._size = size

    def _params(self):
        return (self._size,)

    @property
    def size(self):
        return self._size

    def zero(self):
        return linalg.zeros(self._size)

    def one(self):
        return linalg.identity(self._size)

    def contains(self, x):
        return isinstance(x, tuple) and linalg.size_of(x) == self._size

    def add(self, x, y):
        return linalg.add(x, y)

    def neg(self, x):
        return linalg.neg(x)

    def mul(self, x, y):
        return linalg.mul(x, y)

    def scale(self, x, c):
        return linalg.scale(x, c)

    def from_rational(self, c):
        return linalg.scalar(Fraction(c), self._size)

    def is_zero(self, x):
        return linalg.is_zero(x)

    def format(self, x):
        return format_matrix(x)

    def random_element(self, rng, entry_range=3):
        return linalg.from_rows([[rng.randint(-entry_range, entry_range) for _ in range(self._size)]
                                 for _ in range(self._size)])
