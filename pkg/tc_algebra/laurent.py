from fractions import Fraction

from tc_algebra.terms import Terms


class LaurentPoly(Terms):
    """A Laurent polynomial sum c_k t^k in one variable t, keyed by k."""

    __slots__ = ()

    def _from_scalar(self, c):
        return LaurentPoly({0: c})

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = {}
        for j, c in self.items():
            for k, d in other.items():
                terms[j + k] = terms.get(j + k, 0) + c * d
        return LaurentPoly(terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            if len(self) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.items()
            return LaurentPoly({e * k: Fraction(1) / c ** -k})
        result = LaurentPoly({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def sorted_items(self):
        return sorted(self.items())

    def __repr__(self):
        return f"LaurentPoly({dict(self.sorted_items())})"
