from fractions import Fraction


class Terms:
    """A finite association key -> nonzero exact rational.

    Subclasses fix what the keys mean (exponents, tensor legs, normal-ordered
    words) and add their products. Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        for key, value in (terms or {}).items():
            value = Fraction(value)
            if value != 0:
                cleaned[key] = value
        self._terms = cleaned
        self._hash = None

    def _params(self):
        """Constructor arguments other than the term dictionary."""
        return ()

    def _new(self, terms):
        return type(self)(*self._params(), terms)

    def _check_compatible(self, other):
        if type(other) is not type(self) or other._params() != self._params():
            raise TypeError(f"cannot combine {self!r} with {other!r}")

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(key, Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self._from_scalar(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._params() == other._params() and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._params(), frozenset(self._terms.items())))
        return self._hash

    def _from_scalar(self, c):
        raise TypeError(f"{type(self).__name__} has no scalar embedding")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._from_scalar(other)
        if type(other) is not type(self):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, value in other.items():
            terms[key] = terms.get(key, 0) + value
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({key: -value for key, value in self.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._from_scalar(other)
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        return self._new({key: c * value for key, value in self.items()})
