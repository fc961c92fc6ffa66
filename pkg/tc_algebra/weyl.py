"""Normal-ordered arithmetic in the Weyl algebra A_n and in M_N(A_n).

Elements are stored as sums of c * p^beta q^alpha with every p to the left
of every q. The canonical representation (p_i acting as multiplication by
T_i and q_i as d/dT_i on H (x) k^N) is the multiplication oracle.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, inf

from tc_algebra import multiindex as mi
from tc_algebra.errors import DimensionMismatchError, IndexOutOfRangeError, VariableCountError
from tc_algebra.hopf import HPoly, partial_derivative
from tc_algebra.terms import Terms


class WeylElement(Terms):
    """sum c_{beta,alpha} p^beta q^alpha, keyed by (beta, alpha)."""

    __slots__ = ("_n",)

    def __init__(self, n, terms=None):
        for beta, alpha in (terms or {}):
            if len(beta) != n or len(alpha) != n:
                raise VariableCountError(n, max(len(beta), len(alpha)))
        self._n = n
        super().__init__(terms)

    def _params(self):
        return (self._n,)

    def _check_compatible(self, other):
        if isinstance(other, WeylElement) and other.n != self._n:
            raise VariableCountError(self._n, other.n)
        super()._check_compatible(other)

    def _from_scalar(self, c):
        return WeylElement.constant(c, self._n)

    @property
    def n(self):
        return self._n

    @classmethod
    def constant(cls, c, n):
        return cls(n, {(mi.zero(n), mi.zero(n)): c})

    @classmethod
    def p(cls, i, n):
        return cls(n, {(mi.unit(i, n), mi.zero(n)): 1})

    @classmethod
    def q(cls, i, n):
        return cls(n, {(mi.zero(n), mi.unit(i, n)): 1})

    @classmethod
    def monomial(cls, beta, alpha, c=1):
        return cls(len(beta), {(tuple(beta), tuple(alpha)): c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return weyl_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError(f"Weyl elements have no negative powers, got exponent {k}")
        result = WeylElement.constant(1, self._n)
        for _ in range(k):
            result = result * self
        return result

    def p_degree(self):
        return max((mi.degree(beta) for beta, _ in self.keys()), default=0)

    def q_degree(self):
        return max((mi.degree(alpha) for _, alpha in self.keys()), default=0)

    def is_q_free(self):
        return all(mi.degree(alpha) == 0 for _, alpha in self.keys())

    def sorted_items(self):
        return sorted(self.items(), key=lambda item: (mi.grlex_key(item[0][0] + item[0][1]),
                                                      mi.grlex_key(item[0][0])))

    def __repr__(self):
        return f"WeylElement({self._n}, {dict(self.sorted_items())})"


@lru_cache(maxsize=65536)
def _reorder(alpha, beta):
    """q^alpha p^beta in normal order: kappa -> coefficient of p^{beta-kappa} q^{alpha-kappa}.

    One variable at a time: q^a p^b = sum_k k! C(a,k) C(b,k) p^{b-k} q^{a-k}.
    """
    result = {(): 1}
    for a, b in zip(alpha, beta):
        factors = {k: factorial(k) * comb(a, k) * comb(b, k) for k in range(min(a, b) + 1)}
        result = {kappa + (k,): c * f for kappa, c in result.items() for k, f in factors.items()}
    return result


def weyl_mul(a, b):
    if a.n != b.n:
        raise VariableCountError(a.n, b.n)
    terms = {}
    for (beta1, alpha1), c in a.items():
        for (beta2, alpha2), d in b.items():
            for kappa, f in _reorder(alpha1, beta2).items():
                beta = tuple(x + y - k for x, y, k in zip(beta1, beta2, kappa))
                alpha = tuple(x + y - k for x, y, k in zip(alpha1, alpha2, kappa))
                terms[(beta, alpha)] = terms.get((beta, alpha), 0) + c * d * f
    return WeylElement(a.n, terms)


def weyl_derivation(a, i):
    """d_i = [., p_i], which on normal forms is d/dq_i."""
    if isinstance(a, MatWeyl):
        return a.map(lambda x: weyl_derivation(x, i))
    if not 1 <= i <= a.n:
        raise IndexOutOfRangeError(f"variable index {i} outside 1..{a.n}")
    terms = {}
    for (beta, alpha), c in a.items():
        if alpha[i - 1] > 0:
            lowered = alpha[:i - 1] + (alpha[i - 1] - 1,) + alpha[i:]
            terms[(beta, lowered)] = c * alpha[i - 1]
    return WeylElement(a.n, terms)


def q_adic_degree(a):
    """min |alpha| over the support; a lies in Q_k iff the result is >= k."""
    if isinstance(a, MatWeyl):
        return min((q_adic_degree(x) for row in a.rows for x in row), default=inf)
    if a.is_zero():
        return inf
    return min(mi.degree(alpha) for _, alpha in a.keys())


def weyl_from_p_poly(f):
    """Read a polynomial in T as the same polynomial in p."""
    zero = mi.zero(f.n)
    return WeylElement(f.n, {(beta, zero): c for beta, c in f.items()})


def p_poly_of(a):
    """The q-free part of a, read back as a polynomial in T."""
    zero = mi.zero(a.n)
    return HPoly(a.n, {beta: c for (beta, alpha), c in a.items() if alpha == zero})


def a_f_value(f, alpha):
    """f q^alpha for f in k[p]."""
    return f * WeylElement.monomial(mi.zero(len(alpha)), alpha)


class MatWeyl:
    """A square N x N matrix over A_n."""

    __slots__ = ("_n", "_rows")

    def __init__(self, n, rows):
        rows = tuple(tuple(row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionMismatchError(f"matrix over A_{n} is not square")
        for row in rows:
            for x in row:
                if x.n != n:
                    raise VariableCountError(n, x.n)
        self._n = n
        self._rows = rows

    @classmethod
    def scalar(cls, w, size):
        zero = WeylElement(w.n)
        return cls(w.n, [[w if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def identity(cls, n, size):
        return cls.scalar(WeylElement.constant(1, n), size)

    @classmethod
    def zero(cls, n, size):
        return cls.scalar(WeylElement(n), size)

    @classmethod
    def from_scalar_matrix(cls, matrix, w):
        """M * w for a rational matrix M and a Weyl element w."""
        return cls(w.n, [[w.scale(c) for c in row] for row in matrix])

    @property
    def n(self):
        return self._n

    @property
    def size(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def entry(self, i, j):
        return self._rows[i][j]

    def map(self, fn, n=None):
        """Entrywise image; `n` is the variable count of the images when fn changes it."""
        return MatWeyl(self._n if n is None else n, [[fn(x) for x in row] for row in self._rows])

    def _check(self, other):
        if other.n != self._n:
            raise VariableCountError(self._n, other.n)
        if other.size != self.size:
            raise DimensionMismatchError(f"matrix sizes differ: {self.size} and {other.size}")

    def _promote(self, other):
        if isinstance(other, (int, Fraction)):
            return MatWeyl.scalar(WeylElement.constant(other, self._n), self.size)
        if isinstance(other, WeylElement):
            return MatWeyl.scalar(other, self.size)
        return other

    def __add__(self, other):
        other = self._promote(other)
        if not isinstance(other, MatWeyl):
            return NotImplemented
        self._check(other)
        return MatWeyl(self._n, [[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other.rows)])

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other):
        other = self._promote(other)
        if not isinstance(other, MatWeyl):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return self.map(lambda x: x.scale(c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._promote(other)
        if not isinstance(other, MatWeyl):
            return NotImplemented
        self._check(other)
        size = self.size
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                total = WeylElement(self._n)
                for k in range(size):
                    left, right = self._rows[i][k], other.rows[k][j]
                    if left and right:
                        total = total + left * right
                row.append(total)
            rows.append(row)
        return MatWeyl(self._n, rows)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._promote(other)
        if not isinstance(other, MatWeyl):
            return NotImplemented
        return other * self

    def is_zero(self):
        return all(x.is_zero() for row in self._rows for x in row)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._promote(other)
        if not isinstance(other, MatWeyl):
            return NotImplemented
        return self._n == other.n and self._rows == other.rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def p_degree(self):
        return max(x.p_degree() for row in self._rows for x in row)

    def q_degree(self):
        return max(x.q_degree() for row in self._rows for x in row)

    def __repr__(self):
        return f"MatWeyl({self._n}, {[list(row) for row in self._rows]})"


class HVector:
    """An element of M = H (x) k^N."""

    __slots__ = ("_n", "_entries")

    def __init__(self, n, entries):
        entries = tuple(entries)
        for f in entries:
            if f.n != n:
                raise VariableCountError(n, f.n)
        self._n = n
        self._entries = entries

    @classmethod
    def basis(cls, alpha, j, size):
        """T^alpha e_j with 0-based j."""
        n = len(alpha)
        return cls(n, [HPoly.monomial(alpha) if k == j else HPoly(n) for k in range(size)])

    @property
    def n(self):
        return self._n

    @property
    def size(self):
        return len(self._entries)

    @property
    def entries(self):
        return self._entries

    def __eq__(self, other):
        if not isinstance(other, HVector):
            return NotImplemented
        return self._n == other.n and self._entries == other.entries

    def __hash__(self):
        return hash((self._n, self._entries))

    def __repr__(self):
        return f"HVector({self._n}, {list(self._entries)})"


class PolyMatrix:
    """An N x N matrix of polynomials; read in p for ideals and in T for current targets."""

    __slots__ = ("_n", "_rows")

    def __init__(self, n, rows):
        rows = tuple(tuple(row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionMismatchError("polynomial matrix is not square")
        for row in rows:
            for f in row:
                if f.n != n:
                    raise VariableCountError(n, f.n)
        self._n = n
        self._rows = rows

    @classmethod
    def scalar(cls, f, size):
        zero = HPoly(f.n)
        return cls(f.n, [[f if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def zero(cls, n, size):
        return cls.scalar(HPoly(n), size)

    @classmethod
    def from_scalar_matrix(cls, matrix, f):
        return cls(f.n, [[f.scale(c) for c in row] for row in matrix])

    @property
    def n(self):
        return self._n

    @property
    def size(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def entry(self, i, j):
        return self._rows[i][j]

    def map(self, fn, n=None):
        return PolyMatrix(self._n if n is None else n, [[fn(f) for f in row] for row in self._rows])

    def _check(self, other):
        if other.n != self._n:
            raise VariableCountError(self._n, other.n)
        if other.size != self.size:
            raise DimensionMismatchError(f"matrix sizes differ: {self.size} and {other.size}")

    def _promote(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyMatrix.scalar(HPoly.constant(other, self._n), self.size)
        if isinstance(other, HPoly):
            return PolyMatrix.scalar(other, self.size)
        return other

    def __add__(self, other):
        other = self._promote(other)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check(other)
        return PolyMatrix(self._n, [[f + g for f, g in zip(r, s)] for r, s in zip(self._rows, other.rows)])

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda f: -f)

    def __sub__(self, other):
        other = self._promote(other)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return self.map(lambda f: f.scale(c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._promote(other)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check(other)
        size = self.size
        return PolyMatrix(self._n, [[sum((self._rows[i][k] * other.rows[k][j] for k in range(size)),
                                         HPoly(self._n))
                                     for j in range(size)] for i in range(size)])

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def is_zero(self):
        return all(f.is_zero() for row in self._rows for f in row)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._promote(other)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._n == other.n and self._rows == other.rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def degree(self):
        return max(f.degree() for row in self._rows for f in row)

    def to_matweyl(self):
        """Q(p_1, ..., p_n)."""
        return MatWeyl(self._n, [[weyl_from_p_poly(f) for f in row] for row in self._rows])

    def __repr__(self):
        return f"PolyMatrix({self._n}, {[list(row) for row in self._rows]})"


def _apply_weyl(w, f):
    """Canonical action of a Weyl element on a polynomial."""
    result = HPoly(f.n)
    for (beta, alpha), c in w.items():
        image = f
        for i, a in enumerate(alpha, start=1):
            for _ in range(a):
                image = partial_derivative(image, i)
            if image.is_zero():
                break
        if image:
            result = result + image * HPoly.monomial(beta, c)
    return result


def rep_apply(a, v):
    """Act with p_i as multiplication by T_i and with q_i as d/dT_i on H (x) k^N."""
    if isinstance(a, WeylElement):
        a = MatWeyl.scalar(a, v.size)
    if a.n != v.n:
        raise VariableCountError(a.n, v.n)
    if a.size != v.size:
        raise DimensionMismatchError(f"matrix of size {a.size} applied to a vector of length {v.size}")
    entries = []
    for row in a.rows:
        total = HPoly(v.n)
        for w, f in zip(row, v.entries):
            if w and f:
                total = total + _apply_weyl(w, f)
        entries.append(total)
    return HVector(v.n, entries)


def _sigma_scalar(a):
    result = WeylElement(a.n)
    zero = mi.zero(a.n)
    for (beta, alpha), c in a.items():
        q_part = WeylElement.monomial(zero, alpha)
        p_part = WeylElement.monomial(beta, zero, (-1) ** mi.degree(beta))
        result = result + (q_part * p_part).scale(c)
    return result


def involution_sigma(a):
    """Anti-automorphism p_i -> -p_i, q_i -> q_i, composed with the transpose."""
    if isinstance(a, WeylElement):
        return _sigma_scalar(a)
    size = a.size
    return MatWeyl(a.n, [[_sigma_scalar(a.entry(j, i)) for j in range(size)] for i in range(size)])


def commutator(a, b):
    return a * b - b * a


def jordan_product(a, b):
    return (a * b + b * a).scale(Fraction(1, 2))


def ideal_element(m, q_matrix):
    """m * Q(p), an element of the left ideal A_{n,N,Q}."""
    if m.size != q_matrix.size:
        raise DimensionMismatchError(f"matrix sizes differ: {m.size} and {q_matrix.size}")
    return m * q_matrix.to_matweyl()


def check_oracle_pair(a, b, v):
    """rep(ab, v) == rep(a, rep(b, v))."""
    return rep_apply(a * b, v) == rep_apply(a, rep_apply(b, v))


def check_t_invariance_a_f(f, alpha):
    """d_i(f q^alpha) = alpha_i f q^{alpha - e_i} for every i, with d_i = [., p_i]."""
    n = len(alpha)
    value = a_f_value(f, alpha)
    for i in range(1, n + 1):
        bracket = commutator(value, WeylElement.p(i, n))
        lowered = mi.sub(alpha, mi.unit(i, n))
        expected = a_f_value(f, lowered).scale(alpha[i - 1]) if lowered is not None else WeylElement(n)
        if bracket != expected or weyl_derivation(value, i) != expected:
            return False
    return True


def check_right_p_identity(a, i):
    """a p_i = p_i a + d_i(a)."""
    p_i = WeylElement.p(i, a.n)
    if isinstance(a, MatWeyl):
        p_i = MatWeyl.scalar(p_i, a.size)
    return a * p_i == p_i * a + weyl_derivation(a, i)
