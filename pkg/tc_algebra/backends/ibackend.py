from abc import ABC, abstractmethod


class IBackend(ABC):
    """A target TC-algebra for conformal maps.

    A backend supplies target arithmetic, the n commuting derivations, the
    values of the basic maps a_{p^beta M} and the "q-free part" of a target
    element, which is what reconstruction reads coefficients from.
    """

    name = None

    def __init__(self, n, size):
        self._n = n
        self._size = size

    @property
    def n(self):
        return self._n

    @property
    def size(self):
        return self._size

    def __eq__(self, other):
        if not isinstance(other, IBackend):
            return NotImplemented
        return (self.name, self._n, self._size) == (other.name, other.n, other.size)

    def __hash__(self):
        return hash((self.name, self._n, self._size))

    def __repr__(self):
        return f"{type(self).__name__}(n={self._n}, N={self._size})"

    @abstractmethod
    def zero_value(self):
        """The zero of the target algebra."""
        pass

    @abstractmethod
    def coerce(self, value):
        """Promote a scalar-sized target value (N = 1 shorthand) to the target matrix type."""
        pass

    @abstractmethod
    def basic_value(self, beta, matrix, alpha):
        """Value of the basic map a_{p^beta M} at T^alpha."""
        pass

    @abstractmethod
    def derivation(self, value, i):
        """The distinguished derivation d_i of the target."""
        pass

    @abstractmethod
    def q_free_part(self, value):
        """beta -> rational matrix: the coefficients of p^beta M in the part of value of q-degree 0."""
        pass

    @abstractmethod
    def witness_terms(self, value):
        """Decompose value as a sum of basic values: list of (beta, matrix, alpha)."""
        pass

    @abstractmethod
    def check_beta(self, beta):
        """Raise when the backend has no basic map indexed by p^beta."""
        pass

    @abstractmethod
    def with_vars(self, n):
        """The same kind of backend over n variables."""
        pass

    @abstractmethod
    def with_size(self, size):
        """The same kind of backend with matrix size `size`."""
        pass
