"""Translation-invariant maps H -> A in canonical form and their products.

A conformal element is stored as sum c_{gamma,beta} T^gamma . a_{p^beta M}.
Products are computed pointwise on the monomials of a probe window and read
back through `reconstruct`, which also verifies every probed value.
"""
import logging
from fractions import Fraction

from tc_algebra import linalg
from tc_algebra import multiindex as mi
from tc_algebra.errors import (BackendMismatchError, DimensionMismatchError, InconsistentTableError,
                               IndexOutOfRangeError, ReconstructionError, VariableCountError)
from tc_algebra.hopf import DualPoly, HPoly, antipode, coproduct, dual_h_action, dual_to_hpoly
from tc_algebra.report import check, combine, failed, passed

logger = logging.getLogger(__name__)


class ConformalElement:
    """sum over (gamma, beta) of T^gamma . a_{p^beta M}; matrices are never zero."""

    __slots__ = ("_backend", "_coeffs")

    def __init__(self, backend, coeffs=None):
        cleaned = {}
        for (gamma, beta), matrix in (coeffs or {}).items():
            gamma, beta = tuple(gamma), tuple(beta)
            if len(gamma) != backend.n:
                raise VariableCountError(backend.n, len(gamma))
            backend.check_beta(beta)
            matrix = linalg.from_rows(matrix)
            if linalg.size_of(matrix) != backend.size:
                raise DimensionMismatchError(
                    f"{linalg.size_of(matrix)}x{linalg.size_of(matrix)} coefficient with N={backend.size}")
            if (gamma, beta) in cleaned:
                matrix = linalg.add(cleaned[(gamma, beta)], matrix)
            cleaned[(gamma, beta)] = matrix
        self._backend = backend
        self._coeffs = {key: m for key, m in cleaned.items() if not linalg.is_zero(m)}

    @classmethod
    def zero(cls, backend):
        return cls(backend)

    @classmethod
    def basic(cls, backend, beta=None, matrix=None, gamma=None):
        """T^gamma . a_{p^beta M}; defaults give a_1."""
        zero = mi.zero(backend.n)
        beta = zero if beta is None else tuple(beta)
        gamma = zero if gamma is None else tuple(gamma)
        matrix = linalg.identity(backend.size) if matrix is None else matrix
        return cls(backend, {(gamma, beta): matrix})

    @property
    def backend(self):
        return self._backend

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def degT(self):
        return max((mi.degree(gamma) for gamma, _ in self._coeffs), default=0)

    def deg_p(self):
        return max((mi.degree(beta) for _, beta in self._coeffs), default=0)

    def sorted_items(self):
        return sorted(self._coeffs.items(),
                      key=lambda item: (mi.grlex_key(item[0][0]), mi.grlex_key(item[0][1])))

    def _check(self, other):
        if not isinstance(other, ConformalElement):
            return False
        if other.backend != self._backend:
            raise BackendMismatchError(f"{self._backend!r} vs {other.backend!r}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        coeffs = dict(self._coeffs)
        for key, matrix in other.items():
            coeffs[key] = linalg.add(coeffs[key], matrix) if key in coeffs else matrix
        return ConformalElement(self._backend, coeffs)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return ConformalElement(self._backend, {key: linalg.scale(m, c) for key, m in self._coeffs.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ConformalElement):
            return NotImplemented
        return self._backend == other.backend and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._backend, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"ConformalElement({self._backend!r}, {dict(self.sorted_items())})"


class EvalTable:
    """Candidate values c(T^alpha) of a map H -> A, keyed by alpha."""

    def __init__(self, backend, values):
        self._backend = backend
        self._values = {}
        for alpha, value in values.items():
            if len(alpha) != backend.n:
                raise VariableCountError(backend.n, len(alpha))
            self._values[tuple(alpha)] = backend.coerce(value)

    @classmethod
    def of(cls, c, degree):
        """The table of c on every monomial of degree at most `degree`."""
        return cls(c.backend, {alpha: eval_monomial(c, alpha) for alpha in mi.monomials_up_to(c.backend.n, degree)})

    @property
    def backend(self):
        return self._backend

    def items(self):
        return self._values.items()

    def __getitem__(self, alpha):
        return self._values[tuple(alpha)]

    def __len__(self):
        return len(self._values)

    def max_degree(self):
        return max((mi.degree(alpha) for alpha in self._values), default=0)


def _check_same_backend(*elements):
    first = elements[0].backend
    for c in elements[1:]:
        if c.backend != first:
            raise BackendMismatchError(f"{first!r} vs {c.backend!r}")
    return first


def _check_hpoly(backend, f):
    if f.n != backend.n:
        raise VariableCountError(backend.n, f.n)


def eval_monomial(c, alpha):
    """c(T^alpha) = sum (-1)^|gamma| (alpha)_gamma M p^beta q^{alpha-gamma}."""
    backend = c.backend
    result = backend.zero_value()
    for (gamma, beta), matrix in c.items():
        rest = mi.sub(alpha, gamma)
        if rest is None:
            continue
        factor = (-1) ** mi.degree(gamma) * mi.falling_factorial(alpha, gamma)
        result = result + backend.basic_value(beta, linalg.scale(matrix, factor), rest)
    return result


def evaluate(c, f):
    """eval(c, f), linear in the polynomial f."""
    backend = c.backend
    _check_hpoly(backend, f)
    result = backend.zero_value()
    for alpha, coefficient in f.items():
        value = eval_monomial(c, alpha)
        if value:
            result = result + value.scale(coefficient)
    return result


def haction(i, c):
    """T_i . c, which is f -> -d_i c(f): shifts every gamma by e_i."""
    n = c.backend.n
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"variable index {i} outside 1..{n}")
    e_i = mi.unit(i, n)
    return ConformalElement(c.backend, {(mi.add(gamma, e_i), beta): m for (gamma, beta), m in c.items()})


def hpoly_action(h, c):
    """h . c for a polynomial h, extending haction multiplicatively."""
    _check_hpoly(c.backend, h)
    result = ConformalElement.zero(c.backend)
    for alpha, coefficient in h.items():
        shifted = ConformalElement(c.backend, {(mi.add(gamma, alpha), beta): m for (gamma, beta), m in c.items()})
        result = result + shifted.scale(coefficient)
    return result


def reconstruct(backend, table, window=None):
    """The canonical element with the given values.

    c_{alpha,beta} = (-1)^|alpha| / alpha! times the p^beta coefficient of the
    q-free part of table[alpha]. When `window` is given, a q-free part on the
    layer |alpha| = window means the support was not captured and the table is
    refused. Every stored value is compared against the result.
    """
    coeffs = {}
    for alpha, value in table.items():
        parts = backend.q_free_part(value)
        if window is not None and parts and mi.degree(alpha) >= window:
            raise ReconstructionError(f"q-free part persists at T^{alpha} on the top probe layer {window}")
        factor = Fraction((-1) ** mi.degree(alpha), mi.factorial(alpha))
        for beta, matrix in parts.items():
            coeffs[(alpha, beta)] = linalg.scale(matrix, factor)
    result = ConformalElement(backend, coeffs)
    for alpha, value in table.items():
        if eval_monomial(result, alpha) != value:
            raise InconsistentTableError(f"value at T^{alpha} is not the value of a T-invariant map")
    logger.debug("reconstructed %d coefficients from %d table entries", len(coeffs), len(table))
    return result


def _window(a, b, f):
    return a.degT() + b.degT() + f.degree() + a.deg_p() + b.deg_p() + 1


def fproduct(a, b, f):
    """a_(f) b, given pointwise by (a_(f)b)(g) = a(f_(1)) b(S(f_(2)) g)."""
    backend = _check_same_backend(a, b)
    _check_hpoly(backend, f)
    if a.is_zero() or b.is_zero() or f.is_zero():
        return ConformalElement.zero(backend)
    window = _window(a, b, f)
    logger.debug("f-product probe window %d over n=%d", window, backend.n)
    left_cache, right_cache = {}, {}

    def left(alpha):
        if alpha not in left_cache:
            left_cache[alpha] = eval_monomial(a, alpha)
        return left_cache[alpha]

    def right(alpha):
        if alpha not in right_cache:
            right_cache[alpha] = eval_monomial(b, alpha)
        return right_cache[alpha]

    values = {}
    for alpha in mi.monomials_up_to(backend.n, window):
        value = backend.zero_value()
        for mu, c in f.items():
            for kappa in mi.below(mu):
                rest = mi.sub(mu, kappa)
                x = left(kappa)
                if not x:
                    continue
                y = right(mi.add(rest, alpha))
                if not y:
                    continue
                factor = c * mi.binomial(mu, kappa) * (-1) ** mi.degree(rest)
                value = value + (x * y).scale(factor)
        values[alpha] = value
    return reconstruct(backend, EvalTable(backend, values), window)


def x_product(a, b, x):
    """a_(x) b for x in H*, through the identification t^lambda <-> T^lambda."""
    return fproduct(a, b, dual_to_hpoly(x))


def nproduct(a, b, n):
    """a_(n) b = a_(T^n) b; one-variable sessions only."""
    backend = _check_same_backend(a, b)
    if backend.n != 1:
        raise VariableCountError(1, backend.n)
    if n < 0:
        raise IndexOutOfRangeError(f"n-product index must be >= 0, got {n}")
    return fproduct(a, b, HPoly.monomial((n,)))


def locality_bound(a, b):
    return a.degT() + b.degT() + a.deg_p() + b.deg_p()


def locality_set(a, b):
    """{lambda : a_(T^lambda) b != 0}, searched up to the degree bound."""
    backend = _check_same_backend(a, b)
    if a.is_zero() or b.is_zero():
        return frozenset()
    return frozenset(lam for lam in mi.monomials_up_to(backend.n, locality_bound(a, b))
                     if fproduct(a, b, HPoly.monomial(lam)))


def check_locality_bound(a, b):
    """Every product one degree beyond the bound vanishes."""
    backend = _check_same_backend(a, b)
    bound = locality_bound(a, b)
    for lam in mi.of_degree(backend.n, bound + 1):
        if fproduct(a, b, HPoly.monomial(lam)):
            return failed("locality-bound", f"lambda={lam}", f"bound {bound}")
    return passed("locality-bound", f"bound {bound}")


def check_evaluation_identity(a, b, f, g):
    """a(f) b(g) == sum a_(f_(1)) b evaluated at f_(2) g."""
    backend = _check_same_backend(a, b)
    lhs = evaluate(a, f) * evaluate(b, g)
    rhs = backend.zero_value()
    grouped = {}
    for (kappa1, kappa2), c in coproduct(f).items():
        grouped.setdefault(kappa1, HPoly(backend.n))
        grouped[kappa1] = grouped[kappa1] + HPoly.monomial(kappa2, c)
    for kappa1, second in grouped.items():
        product = fproduct(a, b, HPoly.monomial(kappa1))
        if product:
            rhs = rhs + evaluate(product, second * g)
    return check("evaluation-identity", lhs == rhs, f"lhs={lhs!r} rhs={rhs!r}")


def check_H0(a, b, c, f, g, alpha=2, beta=-3):
    """Bilinearity in the elements and linearity in the polynomial slot."""
    results = [
        check("H0-left", fproduct(a.scale(alpha) + c.scale(beta), b, f)
              == fproduct(a, b, f).scale(alpha) + fproduct(c, b, f).scale(beta), "left slot"),
        check("H0-right", fproduct(a, b.scale(alpha) + c.scale(beta), f)
              == fproduct(a, b, f).scale(alpha) + fproduct(a, c, f).scale(beta), "right slot"),
        check("H0-poly", fproduct(a, b, f.scale(alpha) + g.scale(beta))
              == fproduct(a, b, f).scale(alpha) + fproduct(a, b, g).scale(beta), "polynomial slot"),
    ]
    return combine("H0", results)


def _h2_sides(a, b, h, x, twisted):
    lhs1 = x_product(hpoly_action(h, a), b, x)
    rhs1 = x_product(a, b, dual_h_action(x, h, twisted))
    lhs2 = x_product(a, hpoly_action(h, b), x)
    rhs2 = ConformalElement.zero(a.backend)
    for (kappa1, kappa2), c in coproduct(h).items():
        shifted = dual_h_action(x, antipode(HPoly.monomial(kappa1)), twisted)
        rhs2 = rhs2 + hpoly_action(HPoly.monomial(kappa2, c), x_product(a, b, shifted))
    return lhs1 == rhs1, lhs2 == rhs2


def check_H2(a, b, h, lam):
    """(h a)_(x) b = a_(x h) b and a_(x) (h b) = h_(2) (a_(S(h_(1)) x) b) for x = t^lambda."""
    _check_same_backend(a, b)
    x = DualPoly.t(lam)
    first, second = _h2_sides(a, b, h, x, twisted=True)
    if first and second:
        return passed("H2")
    alt_first, alt_second = _h2_sides(a, b, h, x, twisted=False)
    logger.debug("H2 failed for h=%r lambda=%s; untwisted action gives %s/%s", h, lam, alt_first, alt_second)
    return failed("H2", f"a={a!r} b={b!r} h={h!r} lambda={lam}",
                  f"first display {first}, second display {second}; "
                  f"with <x.h,f> = <x,hf>: {alt_first}, {alt_second}")


def check_C2(a, b, n):
    """T a_(n) b = -n a_(n-1) b, with T a_(0) b = 0."""
    lhs = nproduct(haction(1, a), b, n)
    rhs = nproduct(a, b, n - 1).scale(-n) if n >= 1 else ConformalElement.zero(a.backend)
    return check("C2", lhs == rhs, f"n={n} lhs={lhs!r} rhs={rhs!r}")


def check_C3(a, b, n):
    """a_(n) T b = T(a_(n) b) + n a_(n-1) b."""
    lhs = nproduct(a, haction(1, b), n)
    rhs = haction(1, nproduct(a, b, n))
    if n >= 1:
        rhs = rhs + nproduct(a, b, n - 1).scale(n)
    return check("C3", lhs == rhs, f"n={n} lhs={lhs!r} rhs={rhs!r}")


def check_haction_commutes(c, i, j):
    return check("haction-commutes", haction(i, haction(j, c)) == haction(j, haction(i, c)), f"i={i} j={j}")


def tc_witness(backend, target):
    """Pairs (c, f) with sum eval(c, f) = target: M p^beta q^alpha comes from (a_{p^beta M}, T^alpha)."""
    zero = mi.zero(backend.n)
    return [(ConformalElement(backend, {(zero, beta): matrix}), HPoly.monomial(alpha))
            for beta, matrix, alpha in backend.witness_terms(target)]


def check_tc_witness(backend, target):
    target = backend.coerce(target)
    total = backend.zero_value()
    for c, f in tc_witness(backend, target):
        total = total + evaluate(c, f)
    return check("tc-witness", total == target, f"target={target!r} sum={total!r}")


def check_roundtrip(c):
    """reconstruct(table of c) == c, probing one layer above degT(c)."""
    window = c.degT() + 1
    try:
        back = reconstruct(c.backend, EvalTable.of(c, window), window)
    except (InconsistentTableError, ReconstructionError) as error:
        return failed("roundtrip", repr(c), str(error))
    return check("roundtrip", back == c, repr(c))


def check_current_table(backend, max_degree=2):
    """In the current backend a_{E_ij} _(T^lambda) a_{E_kl} = delta_{lambda,0} delta_{jk} a_{E_il}."""
    zero = mi.zero(backend.n)
    results = []
    for i, j, left in linalg.all_units(backend.size):
        for k, l, right in linalg.all_units(backend.size):
            for lam in mi.monomials_up_to(backend.n, max_degree):
                product = fproduct(ConformalElement.basic(backend, matrix=left),
                                   ConformalElement.basic(backend, matrix=right), HPoly.monomial(lam))
                expected = ConformalElement.zero(backend)
                if lam == zero and j == k:
                    expected = ConformalElement.basic(backend, matrix=linalg.matrix_unit(i, l, backend.size))
                results.append(check("current-table", product == expected,
                                     f"E{i}{j} _({lam}) E{k}{l} = {product!r}"))
    return combine("current-table", results)


def right_ideal_image(c, q_matrix):
    """c . Q(p): the map f -> c(f) Q(p), an element of F(A_{n,N,Q})."""
    backend = c.backend
    if q_matrix.n != backend.n:
        raise VariableCountError(backend.n, q_matrix.n)
    factor = q_matrix.to_matweyl()
    window = c.degT() + q_matrix.degree() + 1
    values = {alpha: eval_monomial(c, alpha) * factor for alpha in mi.monomials_up_to(backend.n, window)}
    return reconstruct(backend, EvalTable(backend, values), window)


def random_element(backend, rng, support=4, degree=3, entry_range=3):
    """A random canonical element with at most `support` summands."""
    n, size = backend.n, backend.size
    zero = mi.zero(n)
    monomials = mi.monomials_up_to(n, degree)
    coeffs = {}
    for _ in range(rng.randint(0, support)):
        gamma = rng.choice(monomials)
        beta = zero if backend.name == "cur" else rng.choice(monomials)
        matrix = [[rng.randint(-entry_range, entry_range) for _ in range(size)] for _ in range(size)]
        coeffs[(gamma, beta)] = matrix
    return ConformalElement(backend, coeffs)
