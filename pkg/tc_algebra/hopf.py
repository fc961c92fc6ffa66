"""The Hopf algebra H = k[T_1..T_n], its tensor powers and its divided-power dual.

Coefficients are exact rationals. The variable count n travels with every
value and is validated on every binary operation.
"""
from fractions import Fraction
from math import inf

from tc_algebra import multiindex as mi
from tc_algebra.errors import ArityError, IndexOutOfRangeError, VariableCountError
from tc_algebra.report import check
from tc_algebra.terms import Terms


def _check_n(left, right):
    if left.n != right.n:
        raise VariableCountError(left.n, right.n)


class HPoly(Terms):
    """An element of H: multi-index -> coefficient."""

    __slots__ = ("_n",)

    def __init__(self, n, terms=None):
        for alpha in (terms or {}):
            if len(alpha) != n:
                raise VariableCountError(n, len(alpha))
        self._n = n
        super().__init__(terms)

    def _params(self):
        return (self._n,)

    def _check_compatible(self, other):
        if isinstance(other, HPoly):
            _check_n(self, other)
        super()._check_compatible(other)

    def _from_scalar(self, c):
        return HPoly.constant(c, self._n)

    @property
    def n(self):
        return self._n

    @classmethod
    def constant(cls, c, n):
        return cls(n, {mi.zero(n): c})

    @classmethod
    def variable(cls, i, n):
        return cls(n, {mi.unit(i, n): 1})

    @classmethod
    def monomial(cls, alpha, c=1):
        return cls(len(alpha), {tuple(alpha): c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return hpoly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError(f"polynomials have no negative powers, got exponent {k}")
        result = HPoly.constant(1, self._n)
        for _ in range(k):
            result = result * self
        return result

    def degree(self):
        """Largest total degree in the support, 0 for the zero polynomial."""
        return max((mi.degree(alpha) for alpha in self.keys()), default=0)

    def constant_term(self):
        return self.coefficient(mi.zero(self._n))

    def sorted_items(self):
        return sorted(self.items(), key=lambda item: mi.grlex_key(item[0]))

    def __repr__(self):
        return f"HPoly({self._n}, {dict(self.sorted_items())})"


class HTensor(Terms):
    """An element of H^{(x)k}: k-tuple of multi-indices -> coefficient."""

    __slots__ = ("_n", "_arity")

    def __init__(self, n, arity, terms=None):
        for key in (terms or {}):
            if len(key) != arity:
                raise ArityError(f"tensor key {key} has {len(key)} legs, expected {arity}")
            for alpha in key:
                if len(alpha) != n:
                    raise VariableCountError(n, len(alpha))
        self._n = n
        self._arity = arity
        super().__init__(terms)

    def _params(self):
        return (self._n, self._arity)

    def _from_scalar(self, c):
        return HTensor(self._n, self._arity, {(mi.zero(self._n),) * self._arity: c})

    @property
    def n(self):
        return self._n

    @property
    def arity(self):
        return self._arity

    @classmethod
    def from_hpoly(cls, f):
        return cls(f.n, 1, {(alpha,): c for alpha, c in f.items()})

    @classmethod
    def pure(cls, *legs):
        """f_1 (x) ... (x) f_k for polynomials f_i."""
        n = legs[0].n
        result = {(): Fraction(1)}
        for leg in legs:
            _check_n(legs[0], leg)
            result = {key + (alpha,): c * d for key, c in result.items() for alpha, d in leg.items()}
        return cls(n, len(legs), result)

    def to_hpoly(self):
        if self._arity != 1:
            raise ArityError(f"tensor of arity {self._arity} is not a polynomial")
        return HPoly(self._n, {key[0]: c for key, c in self.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, HTensor):
            return NotImplemented
        self._check_compatible(other)
        terms = {}
        for left, c in self.items():
            for right, d in other.items():
                key = tuple(mi.add(a, b) for a, b in zip(left, right))
                terms[key] = terms.get(key, 0) + c * d
        return self._new(terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def sorted_items(self):
        return sorted(self.items(), key=lambda item: tuple(mi.grlex_key(a) for a in item[0]))

    def __repr__(self):
        return f"HTensor({self._n}, {self._arity}, {dict(self.sorted_items())})"


class DualPoly(Terms):
    """A finite combination of divided powers t^lambda in H*."""

    __slots__ = ("_n",)

    def __init__(self, n, terms=None):
        for alpha in (terms or {}):
            if len(alpha) != n:
                raise VariableCountError(n, len(alpha))
        self._n = n
        super().__init__(terms)

    def _params(self):
        return (self._n,)

    def _check_compatible(self, other):
        if isinstance(other, DualPoly):
            _check_n(self, other)
        super()._check_compatible(other)

    def _from_scalar(self, c):
        return DualPoly(self._n, {mi.zero(self._n): c})

    @property
    def n(self):
        return self._n

    @classmethod
    def t(cls, lam, c=1):
        return cls(len(lam), {tuple(lam): c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, DualPoly):
            return NotImplemented
        return dual_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def sorted_items(self):
        return sorted(self.items(), key=lambda item: mi.grlex_key(item[0]))

    def __repr__(self):
        return f"DualPoly({self._n}, {dict(self.sorted_items())})"


def hpoly_mul(f, g):
    _check_n(f, g)
    terms = {}
    for alpha, c in f.items():
        for beta, d in g.items():
            key = mi.add(alpha, beta)
            terms[key] = terms.get(key, 0) + c * d
    return HPoly(f.n, terms)


def _monomial_coproduct(alpha):
    return {(kappa, mi.sub(alpha, kappa)): mi.binomial(alpha, kappa) for kappa in mi.below(alpha)}


def coproduct(f):
    """Delta(f) with Delta(T_i) = T_i (x) 1 + 1 (x) T_i, extended multiplicatively."""
    terms = {}
    for alpha, c in f.items():
        for key, b in _monomial_coproduct(alpha).items():
            terms[key] = terms.get(key, 0) + c * b
    return HTensor(f.n, 2, terms)


def expand_leg(tensor, leg, linear_map):
    """Replace leg `leg` (0-based) by its image under `linear_map`.

    `linear_map` takes a multi-index and returns an HPoly or an HTensor; the
    image's legs are spliced in place of the replaced one.
    """
    if not 0 <= leg < tensor.arity:
        raise IndexOutOfRangeError(f"leg {leg} outside 0..{tensor.arity - 1}")
    terms = {}
    new_arity = None
    for key, c in tensor.items():
        image = linear_map(key[leg])
        if isinstance(image, HPoly):
            image = HTensor.from_hpoly(image)
        new_arity = tensor.arity - 1 + image.arity
        for legs, d in image.items():
            new_key = key[:leg] + legs + key[leg + 1:]
            terms[new_key] = terms.get(new_key, 0) + c * d
    if new_arity is None:
        new_arity = tensor.arity
    return HTensor(tensor.n, new_arity, terms)


def iterated_coproduct(f, k):
    """Delta^0 = id, Delta^k = (id (x) Delta^{k-1}) Delta; returns k+1 legs."""
    if k < 0:
        raise IndexOutOfRangeError(f"iterated coproduct order must be >= 0, got {k}")
    result = HTensor.from_hpoly(f)
    for _ in range(k):
        result = expand_leg(result, result.arity - 1,
                            lambda alpha: HTensor(len(alpha), 2, _monomial_coproduct(alpha)))
    return result


def antipode(f):
    return HPoly(f.n, {alpha: (-1) ** mi.degree(alpha) * c for alpha, c in f.items()})


def counit(f):
    return f.constant_term()


def partial_derivative(f, i):
    if not 1 <= i <= f.n:
        raise IndexOutOfRangeError(f"variable index {i} outside 1..{f.n}")
    terms = {}
    for alpha, c in f.items():
        if alpha[i - 1] > 0:
            key = alpha[:i - 1] + (alpha[i - 1] - 1,) + alpha[i:]
            terms[key] = c * alpha[i - 1]
    return HPoly(f.n, terms)


def aug_degree(f):
    """Largest k with f in I^k, I the augmentation ideal; +inf for 0."""
    if f.is_zero():
        return inf
    return min(mi.degree(alpha) for alpha in f.keys())


def tensor_swap(tensor, i=0, j=1):
    def swapped(key):
        key = list(key)
        key[i], key[j] = key[j], key[i]
        return tuple(key)
    return HTensor(tensor.n, tensor.arity, {swapped(key): c for key, c in tensor.items()})


def tensor_counit_leg(tensor, leg):
    """Apply epsilon on one leg, dropping it."""
    zero = mi.zero(tensor.n)
    terms = {}
    for key, c in tensor.items():
        if key[leg] == zero:
            new_key = key[:leg] + key[leg + 1:]
            terms[new_key] = terms.get(new_key, 0) + c
    return HTensor(tensor.n, tensor.arity - 1, terms)


def tensor_map(tensor, maps):
    """Apply one linear map H -> H per leg; `None` leaves a leg alone."""
    result = tensor
    for leg, linear_map in enumerate(maps):
        if linear_map is not None:
            result = expand_leg(result, leg, lambda alpha, fn=linear_map: fn(HPoly.monomial(alpha)))
    return result


def tensor_multiply(tensor):
    """The multiplication map mu: H^{(x)k} -> H."""
    terms = {}
    for key, c in tensor.items():
        alpha = mi.zero(tensor.n)
        for leg in key:
            alpha = mi.add(alpha, leg)
        terms[alpha] = terms.get(alpha, 0) + c
    return HPoly(tensor.n, terms)


def pairing(x, f):
    """<x, f> extending <t^lambda, T^mu> = delta_{lambda,mu} lambda!."""
    _check_n(x, f)
    return sum((c * f.coefficient(lam) * mi.factorial(lam) for lam, c in x.items()), Fraction(0))


def tensor_pairing(duals, tensor):
    """sum <x_1, f_(1)> ... <x_k, f_(k)>."""
    if len(duals) != tensor.arity:
        raise ArityError(f"{len(duals)} dual elements for a tensor with {tensor.arity} legs")
    total = Fraction(0)
    for key, c in tensor.items():
        term = c
        for x, alpha in zip(duals, key):
            term *= x.coefficient(alpha) * mi.factorial(alpha)
            if term == 0:
                break
        total += term
    return total


def dual_mul(x, y):
    """t^lambda t^mu = t^{lambda+mu}: the product dual to the coproduct."""
    _check_n(x, y)
    terms = {}
    for lam, c in x.items():
        for mu, d in y.items():
            key = mi.add(lam, mu)
            terms[key] = terms.get(key, 0) + c * d
    return DualPoly(x.n, terms)


def dual_h_action(x, h, twisted=True):
    """x.h defined by <x.h, f> = <x, S(h) f>.

    With `twisted=False` the alternative <x.h, f> = <x, h f> is returned; it is
    only used to diagnose sign-convention failures.
    """
    _check_n(x, h)
    terms = {}
    for lam, c in x.items():
        for mu, d in h.items():
            rest = mi.sub(lam, mu)
            if rest is None:
                continue
            sign = (-1) ** mi.degree(mu) if twisted else 1
            terms[rest] = terms.get(rest, 0) + sign * c * d * mi.falling_factorial(lam, mu)
    return DualPoly(x.n, terms)


def dual_to_hpoly(x):
    """The identification t^lambda <-> T^lambda (T_i |-> T_i^*)."""
    return HPoly(x.n, x.terms)


def hpoly_to_dual(f):
    return DualPoly(f.n, f.terms)


def _check_arity_two(u):
    if u.arity != 2:
        raise ArityError(f"expected a tensor with 2 legs, got {u.arity}")


def phi(u):
    """Phi(f (x) g) = f S(g_(1)) (x) g_(2)."""
    _check_arity_two(u)
    terms = {}
    for (alpha, beta), c in u.items():
        for kappa in mi.below(beta):
            key = (mi.add(alpha, kappa), mi.sub(beta, kappa))
            coefficient = c * mi.binomial(beta, kappa) * (-1) ** mi.degree(kappa)
            terms[key] = terms.get(key, 0) + coefficient
    return HTensor(u.n, 2, terms)


def phi_inv(u):
    """Phi^{-1}(f (x) g) = f g_(1) (x) g_(2)."""
    _check_arity_two(u)
    terms = {}
    for (alpha, beta), c in u.items():
        for kappa in mi.below(beta):
            key = (mi.add(alpha, kappa), mi.sub(beta, kappa))
            terms[key] = terms.get(key, 0) + c * mi.binomial(beta, kappa)
    return HTensor(u.n, 2, terms)


def check_coassociative(f):
    """(Delta (x) id) Delta = (id (x) Delta) Delta."""
    delta = coproduct(f)
    left = expand_leg(delta, 0, lambda alpha: HTensor(len(alpha), 2, _monomial_coproduct(alpha)))
    right = expand_leg(delta, 1, lambda alpha: HTensor(len(alpha), 2, _monomial_coproduct(alpha)))
    return check("coassociativity", left == right and left == iterated_coproduct(f, 2), repr(f))


def check_cocommutative(f):
    delta = coproduct(f)
    return check("cocommutativity", tensor_swap(delta) == delta, repr(f))


def check_counit(f):
    """(eps (x) id) Delta = (id (x) eps) Delta = id."""
    delta = coproduct(f)
    ok = tensor_counit_leg(delta, 0).to_hpoly() == f and tensor_counit_leg(delta, 1).to_hpoly() == f
    return check("counit", ok, repr(f))


def check_antipode(f):
    """mu (S (x) id) Delta = mu (id (x) S) Delta = eps(f) 1."""
    delta = coproduct(f)
    unit = HPoly.constant(counit(f), f.n)
    left = tensor_multiply(tensor_map(delta, [antipode, None]))
    right = tensor_multiply(tensor_map(delta, [None, antipode]))
    return check("antipode", left == unit and right == unit, repr(f))


def check_dual_mul(x, y, f):
    """<x y, f> = <x (x) y, Delta f>."""
    return check("dual-mul", pairing(dual_mul(x, y), f) == tensor_pairing([x, y], coproduct(f)),
                 f"x={x!r} y={y!r} f={f!r}")


def check_phi_roundtrip(u):
    return check("phi-roundtrip", phi(phi_inv(u)) == u and phi_inv(phi(u)) == u, repr(u))
