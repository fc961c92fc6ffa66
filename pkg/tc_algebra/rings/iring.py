from abc import ABC, abstractmethod


class CoeffRing(ABC):
    """An associative ring that formal distributions take coefficients in.

    Elements are plain values of the instance's element type; the ring object
    supplies the arithmetic so that distributions never inspect them.
    """

    name = None

    def _params(self):
        return ()

    def __eq__(self, other):
        if not isinstance(other, CoeffRing):
            return NotImplemented
        return (self.name, self._params()) == (other.name, other._params())

    def __hash__(self):
        return hash((self.name, self._params()))

    def __repr__(self):
        params = ", ".join(str(p) for p in self._params())
        return f"{type(self).__name__}({params})"

    @abstractmethod
    def zero(self):
        pass

    @abstractmethod
    def one(self):
        pass

    @abstractmethod
    def contains(self, x):
        """True when x is an element of this ring."""
        pass

    @abstractmethod
    def format(self, x):
        """Textual form used inside distributions."""
        pass

    @abstractmethod
    def random_element(self, rng, entry_range=3):
        pass

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        return x * y

    def scale(self, x, c):
        return self.mul(self.from_rational(c), x)

    @abstractmethod
    def from_rational(self, c):
        """The image of a rational number under k -> R."""
        pass

    def is_zero(self, x):
        return x == self.zero()

    def equal(self, x, y):
        return self.is_zero(self.sub(x, y))

    def is_compound(self, x):
        """True when the textual form needs parentheses as a coefficient."""
        return False
