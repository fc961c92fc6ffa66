"""Poisson and derivation algebras on H, exterior forms, and the Lie/Jordan parts of M_N(A_n).

Symplectic operations need n = 2k; the form is s = sum dT_i ^ dT_{k+i}.
"""
from fractions import Fraction

from tc_algebra import linalg
from tc_algebra import multiindex as mi
from tc_algebra.confalg import ConformalElement, eval_monomial, fproduct
from tc_algebra.errors import DimensionMismatchError, IndexOutOfRangeError, OddDimensionError, VariableCountError
from tc_algebra.hopf import HPoly, partial_derivative
from tc_algebra.report import check
from tc_algebra.weyl import (HVector, MatWeyl, WeylElement, commutator, involution_sigma, jordan_product, rep_apply,
                             weyl_from_p_poly)


def _half(n):
    if n % 2:
        raise OddDimensionError(n)
    return n // 2


def poisson(f, g, k=None):
    """{f, g} = sum_i df/dT_i dg/dT_{k+i} - df/dT_{k+i} dg/dT_i."""
    if f.n != g.n:
        raise VariableCountError(f.n, g.n)
    half = _half(f.n)
    if k is not None and k != half:
        raise DimensionMismatchError(f"half-dimension {k} in a session with n={f.n}")
    result = HPoly(f.n)
    for i in range(1, half + 1):
        result = result + partial_derivative(f, i) * partial_derivative(g, half + i)
        result = result - partial_derivative(f, half + i) * partial_derivative(g, i)
    return result


class PolyDerivation:
    """D = sum f_i d/dT_i."""

    __slots__ = ("_n", "_components")

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise DimensionMismatchError("a derivation needs at least one component")
        n = len(components)
        for f in components:
            if f.n != n:
                raise VariableCountError(n, f.n)
        self._n = n
        self._components = components

    @classmethod
    def zero(cls, n):
        return cls([HPoly(n)] * n)

    @classmethod
    def partial(cls, i, n, coefficient=None):
        """coefficient * d/dT_i."""
        coefficient = HPoly.constant(1, n) if coefficient is None else coefficient
        return cls([coefficient if j == i else HPoly(n) for j in range(1, n + 1)])

    @property
    def n(self):
        return self._n

    @property
    def components(self):
        return self._components

    def _check(self, other):
        if other.n != self._n:
            raise DimensionMismatchError(f"derivations over {self._n} and {other.n} variables")

    def __add__(self, other):
        if not isinstance(other, PolyDerivation):
            return NotImplemented
        self._check(other)
        return PolyDerivation(f + g for f, g in zip(self._components, other.components))

    def __neg__(self):
        return PolyDerivation(-f for f in self._components)

    def __sub__(self, other):
        if not isinstance(other, PolyDerivation):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return PolyDerivation(f.scale(c) for f in self._components)

    def is_zero(self):
        return all(f.is_zero() for f in self._components)

    def __eq__(self, other):
        if not isinstance(other, PolyDerivation):
            return NotImplemented
        return self._components == other.components

    def __hash__(self):
        return hash(self._components)

    def __repr__(self):
        return f"PolyDerivation({list(self._components)})"


def der_apply(d, f):
    if f.n != d.n:
        raise DimensionMismatchError(f"derivation over {d.n} variables applied to a polynomial over {f.n}")
    result = HPoly(f.n)
    for i, component in enumerate(d.components, start=1):
        if component:
            result = result + component * partial_derivative(f, i)
    return result


def der_bracket(d1, d2):
    """[D1, D2]_j = D1(g_j) - D2(f_j)."""
    d1._check(d2)
    return PolyDerivation(der_apply(d1, g) - der_apply(d2, f) for f, g in zip(d1.components, d2.components))


def divergence(d):
    result = HPoly(d.n)
    for i, component in enumerate(d.components, start=1):
        result = result + partial_derivative(component, i)
    return result


def is_in_Sn(d):
    """D v = 0 for the volume form v, i.e. zero divergence."""
    return divergence(d).is_zero()


class DifferentialForm:
    """A k-form: sorted k-subsets of {1..n} -> polynomial coefficient."""

    __slots__ = ("_n", "_degree", "_terms")

    def __init__(self, n, degree, terms=None):
        cleaned = {}
        for indices, f in (terms or {}).items():
            indices = tuple(indices)
            if len(indices) != degree or list(indices) != sorted(set(indices)):
                raise IndexOutOfRangeError(f"form index {indices} is not a sorted {degree}-subset")
            if indices and not 1 <= indices[0] <= indices[-1] <= n:
                raise IndexOutOfRangeError(f"form index {indices} outside 1..{n}")
            if f.n != n:
                raise VariableCountError(n, f.n)
            if f:
                cleaned[indices] = f
        self._n = n
        self._degree = degree
        self._terms = cleaned

    @property
    def n(self):
        return self._n

    @property
    def degree(self):
        return self._degree

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        if (other.n, other.degree) != (self._n, self._degree):
            raise DimensionMismatchError(f"{self._degree}-form and {other.degree}-form")
        terms = dict(self._terms)
        for indices, f in other.items():
            terms[indices] = terms[indices] + f if indices in terms else f
        return DifferentialForm(self._n, self._degree, terms)

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return (self._n, self._degree, self._terms) == (other.n, other.degree, other._terms)

    def __hash__(self):
        return hash((self._n, self._degree, frozenset(self._terms.items())))

    def __repr__(self):
        return f"DifferentialForm({self._n}, {self._degree}, {dict(self.sorted_items())})"


def volume_form(n):
    return DifferentialForm(n, n, {tuple(range(1, n + 1)): HPoly.constant(1, n)})


def symplectic_form(n):
    half = _half(n)
    return DifferentialForm(n, 2, {(i, half + i): HPoly.constant(1, n) for i in range(1, half + 1)})


def exterior_d(form):
    """d(f dT_I) = sum_j df/dT_j dT_j ^ dT_I."""
    n = form.n
    terms = {}
    for indices, f in form.items():
        for j in range(1, n + 1):
            if j in indices:
                continue
            derivative = partial_derivative(f, j)
            if not derivative:
                continue
            sign = (-1) ** sum(1 for i in indices if i < j)
            key = tuple(sorted(indices + (j,)))
            term = derivative.scale(sign)
            terms[key] = terms[key] + term if key in terms else term
    return DifferentialForm(n, form.degree + 1, terms)


def contract_symplectic(d):
    """i_D s = sum f_i dT_{k+i} - f_{k+i} dT_i."""
    half = _half(d.n)
    terms = {}
    for i in range(1, half + 1):
        terms[(half + i,)] = d.components[i - 1]
        terms[(i,)] = -d.components[half + i - 1]
    return DifferentialForm(d.n, 1, terms)


def is_in_Hn(d):
    """D s = 0; since ds = 0 this is d(i_D s) = 0."""
    return exterior_d(contract_symplectic(d)).is_zero()


def hamiltonian_field(f, k=None):
    """D_f = {f, .} = sum df/dT_i d/dT_{k+i} - df/dT_{k+i} d/dT_i."""
    half = _half(f.n)
    if k is not None and k != half:
        raise DimensionMismatchError(f"half-dimension {k} in a session with n={f.n}")
    components = [HPoly(f.n)] * f.n
    for i in range(1, half + 1):
        components[half + i - 1] = components[half + i - 1] + partial_derivative(f, i)
        components[i - 1] = components[i - 1] - partial_derivative(f, half + i)
    return PolyDerivation(components)


def derivation_to_weyl(d):
    """sum f_i(p) q_i."""
    n = d.n
    result = WeylElement(n)
    for i, component in enumerate(d.components, start=1):
        result = result + weyl_from_p_poly(component) * WeylElement.q(i, n)
    return result


def weyl_to_derivation(w):
    n = w.n
    components = []
    for i in range(1, n + 1):
        unit = mi.unit(i, n)
        components.append(HPoly(n, {beta: c for (beta, alpha), c in w.items() if alpha == unit}))
    for (beta, alpha), _ in w.items():
        if mi.degree(alpha) != 1:
            raise DimensionMismatchError(f"term p^{beta} q^{alpha} is not of the form f(p) q_i")
    return PolyDerivation(components)


def skew_part(a):
    """(a - s(a)) / 2."""
    return (a - involution_sigma(a)).scale(Fraction(1, 2))


def sym_part(a):
    """(a + s(a)) / 2."""
    return (a + involution_sigma(a)).scale(Fraction(1, 2))


def matrix_tc_embed(a, size, position=None):
    """a with every coefficient c replaced by c Id (or c E_ij when position = (i, j))."""
    if a.backend.size != 1:
        raise DimensionMismatchError(f"embedding expects a scalar element, got N={a.backend.size}")
    backend = a.backend.with_size(size)
    unit = linalg.identity(size) if position is None else linalg.matrix_unit(position[0], position[1], size)
    return ConformalElement(backend, {key: linalg.scale(unit, m[0][0]) for key, m in a.items()})


def check_matrix_embed(a, b, f, size, position=None):
    """Embedding commutes with f-products when the target unit is idempotent (Id or E_ii)."""
    embedded = fproduct(matrix_tc_embed(a, size, position), matrix_tc_embed(b, size, position), f)
    ok = embedded == matrix_tc_embed(fproduct(a, b, f), size, position)
    return check("matrix-embed", ok, f"a={a!r} b={b!r} f={f!r} position={position}")


def poly_extension(a, n):
    """a'(T^alpha) = a(T_1^a_1 ... T_r^a_r) T_{r+1}^a_{r+1} ... T_n^a_n, padding gamma and beta."""
    r = a.backend.n
    if r > n:
        raise VariableCountError(n, r)
    backend = a.backend.with_vars(n)
    return ConformalElement(backend, {(mi.pad(gamma, n), mi.pad(beta, n)): m for (gamma, beta), m in a.items()})


def _lift_value(value, n):
    if isinstance(value, MatWeyl):
        return value.map(lambda w: WeylElement(n, {(mi.pad(b, n), mi.pad(a, n)): c for (b, a), c in w.items()}), n)
    return value.map(lambda f: HPoly(n, {mi.pad(alpha, n): c for alpha, c in f.items()}), n)


def check_poly_extension(a, n, degree=3):
    """The extension display on every monomial of degree at most `degree`."""
    extended = poly_extension(a, n)
    r = a.backend.n
    backend = extended.backend
    zero = mi.zero(n)
    for alpha in mi.monomials_up_to(n, degree):
        head, tail = alpha[:r], (0,) * r + alpha[r:]
        tail_value = backend.basic_value(zero, linalg.identity(backend.size), tail)
        expected = _lift_value(eval_monomial(a, head), n) * tail_value
        if eval_monomial(extended, alpha) != expected:
            return check("poly-extension", False, f"alpha={alpha}")
    return check("poly-extension", True)


def wn_basic_map(i, alpha):
    """p^alpha q_i."""
    n = len(alpha)
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"variable index {i} outside 1..{n}")
    return WeylElement.monomial(alpha, mi.unit(i, n))


def check_wn_t_invariance(i, alpha):
    """[q_j, p^alpha q_i] = alpha_j p^(alpha - e_j) q_i for every j."""
    n = len(alpha)
    value = wn_basic_map(i, alpha)
    for j in range(1, n + 1):
        lowered = mi.sub(tuple(alpha), mi.unit(j, n))
        expected = wn_basic_map(i, lowered).scale(alpha[j - 1]) if lowered is not None else WeylElement(n)
        if commutator(WeylElement.q(j, n), value) != expected:
            return check("wn-t-invariance", False, f"i={i} alpha={alpha} j={j}")
    return check("wn-t-invariance", True)


def check_jacobi(f, g, h):
    total = poisson(poisson(f, g), h) + poisson(poisson(g, h), f) + poisson(poisson(h, f), g)
    return check("jacobi", total.is_zero(), f"f={f!r} g={g!r} h={h!r}")


def check_der_jacobi(d1, d2, d3):
    total = (der_bracket(der_bracket(d1, d2), d3) + der_bracket(der_bracket(d2, d3), d1)
             + der_bracket(der_bracket(d3, d1), d2))
    return check("der-jacobi", total.is_zero() and der_bracket(d1, d2) == -der_bracket(d2, d1),
                 f"{d1!r} {d2!r} {d3!r}")


def check_leibniz(d, f, g):
    return check("leibniz", der_apply(d, f * g) == der_apply(d, f) * g + f * der_apply(d, g), repr(d))


def check_divergence_bracket(d1, d2):
    """div [D1, D2] = D1(div D2) - D2(div D1)."""
    lhs = divergence(der_bracket(d1, d2))
    rhs = der_apply(d1, divergence(d2)) - der_apply(d2, divergence(d1))
    return check("divergence-bracket", lhs == rhs, f"{d1!r} {d2!r}")


def check_sn_closed(d1, d2):
    if not (is_in_Sn(d1) and is_in_Sn(d2)):
        return check("sn-closed", True, detail="inputs not in S_n")
    return check("sn-closed", is_in_Sn(der_bracket(d1, d2)), f"{d1!r} {d2!r}")


def check_hn_closed(d1, d2):
    if not (is_in_Hn(d1) and is_in_Hn(d2)):
        return check("hn-closed", True, detail="inputs not in H_n")
    return check("hn-closed", is_in_Hn(der_bracket(d1, d2)), f"{d1!r} {d2!r}")


def check_hamiltonian_consistency(f, g):
    """D_f(g) = {f, g} and D_f lies in H_n."""
    d = hamiltonian_field(f)
    return check("hamiltonian", der_apply(d, g) == poisson(f, g) and is_in_Hn(d), f"f={f!r} g={g!r}")


def check_poisson_homomorphism(f, g, k=None):
    """D_{f,g} = [D_f, D_g]."""
    lhs = hamiltonian_field(poisson(f, g, k), k)
    rhs = der_bracket(hamiltonian_field(f, k), hamiltonian_field(g, k))
    return check("poisson-homomorphism", lhs == rhs, f"f={f!r} g={g!r}")


def check_dd_zero(form):
    return check("dd-zero", exterior_d(exterior_d(form)).is_zero(), repr(form))


def check_skew_closed(a, b):
    """The commutator of two skew parts is skew."""
    x, y = skew_part(a), skew_part(b)
    bracket = commutator(x, y)
    return check("skew-closed", involution_sigma(bracket) == -bracket, f"a={a!r} b={b!r}")


def check_sym_closed(a, b):
    """The Jordan product of two symmetric parts is symmetric."""
    x, y = sym_part(a), sym_part(b)
    product = jordan_product(x, y)
    return check("sym-closed", involution_sigma(product) == product, f"a={a!r} b={b!r}")


def check_weyl_encoding(d, g):
    """f_i(p) q_i acts on polynomials the way D does."""
    w = derivation_to_weyl(d)
    image = rep_apply(w, HVector(g.n, [g]))
    return check("weyl-encoding", image.entries[0] == der_apply(d, g) and weyl_to_derivation(w) == d, repr(d))
