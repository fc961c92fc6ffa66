"""Named batteries of checked identities behind `check SUITE`.

Each suite takes the session and returns one combined CheckResult per
identity. Randomized suites draw from random.Random(session.seed), so a rerun
with the same seed reports the same instances.
"""
import logging
import random
from itertools import product

from tc_algebra import confalg, fdist, hopf, linalg, operad, structures, weyl
from tc_algebra import multiindex as mi
from tc_algebra.backends import make_backend
from tc_algebra.confalg import ConformalElement
from tc_algebra.errors import VariableCountError
from tc_algebra.hopf import DualPoly, HPoly, HTensor
from tc_algebra.report import check, combine
from tc_algebra.rings import make_ring
from tc_algebra.structures import DifferentialForm, PolyDerivation
from tc_algebra.weyl import HVector, MatWeyl, WeylElement

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 200
KNOWN_FREE_DIMS = (1, 2, 12, 120, 1680)


def _random_hpoly(rng, n, degree, terms=3):
    monomials = mi.monomials_up_to(n, degree)
    return HPoly(n, {rng.choice(monomials): rng.randint(-3, 3) for _ in range(rng.randint(1, terms))})


def _random_weyl(rng, n, degree, terms=3):
    monomials = mi.monomials_up_to(n, degree)
    return WeylElement(n, {(rng.choice(monomials), rng.choice(monomials)): rng.randint(-3, 3)
                           for _ in range(rng.randint(1, terms))})


def _random_matweyl(rng, n, size, degree):
    return MatWeyl(n, [[_random_weyl(rng, n, degree) for _ in range(size)] for _ in range(size)])


def _random_derivation(rng, n, degree):
    return PolyDerivation([_random_hpoly(rng, n, degree) for _ in range(n)])


def _basics(backend, bound):
    """T^gamma . a_{p^beta M} for gamma, beta of degree <= bound; M cycles through the matrix units."""
    units = [unit for _, _, unit in linalg.all_units(backend.size)]
    betas = mi.monomials_up_to(backend.n, bound) if backend.name == "cend" else [mi.zero(backend.n)]
    elements = []
    for k, (gamma, beta) in enumerate(product(mi.monomials_up_to(backend.n, bound), betas)):
        elements.append(ConformalElement.basic(backend, beta=beta, matrix=units[k % len(units)], gamma=gamma))
    return elements


def _basic_bound(session):
    """Degree bound of the basic-element grid; one-variable sessions go one degree further."""
    return min(session.degree_bound, 2 if session.n_vars == 1 else 1)


def _session_backend(session):
    return make_backend(session.backend, session.n_vars, session.matrix_size)


def suite_hopf(session, samples):
    n, degree = session.n_vars, session.degree_bound
    monomials = [HPoly.monomial(alpha) for alpha in mi.monomials_up_to(n, degree)]
    duals = [DualPoly.t(lam) for lam in mi.monomials_up_to(n, 2)]
    tensors = [HTensor.pure(f, g) for f in monomials for g in monomials if f.degree() + g.degree() <= min(degree, 4)]
    return [
        combine("coassociativity", [hopf.check_coassociative(f) for f in monomials]),
        combine("cocommutativity", [hopf.check_cocommutative(f) for f in monomials]),
        combine("counit", [hopf.check_counit(f) for f in monomials]),
        combine("antipode", [hopf.check_antipode(f) for f in monomials]),
        combine("dual-mul", [hopf.check_dual_mul(x, y, f) for x in duals for y in duals for f in monomials]),
        combine("phi-roundtrip", [hopf.check_phi_roundtrip(u) for u in tensors]),
    ]


def suite_weyl(session, samples):
    n, size, degree = session.n_vars, session.matrix_size, min(session.degree_bound, 3)
    units = [unit for _, _, unit in linalg.all_units(size)]
    words = [WeylElement.monomial(beta, alpha) for beta in mi.monomials_up_to(n, degree)
             for alpha in mi.monomials_up_to(n, degree) if mi.degree(beta) + mi.degree(alpha) <= degree]
    elements = [MatWeyl.from_scalar_matrix(units[k % len(units)], w) for k, w in enumerate(words)]
    vectors = [HVector.basis(alpha, j, size) for alpha in mi.monomials_up_to(n, 2 * degree) for j in range(size)]
    oracle = []
    for a in elements:
        for b in elements:
            ok = all(weyl.check_oracle_pair(a, b, v) for v in vectors)
            oracle.append(check("oracle", ok, f"a={a!r} b={b!r}"))
    p_polys = [weyl.weyl_from_p_poly(HPoly.monomial(beta)) for beta in mi.monomials_up_to(n, 2)]
    invariance = [check("a_f-t-invariance", weyl.check_t_invariance_a_f(f, alpha), f"f={f!r} alpha={alpha}")
                  for f in p_polys for alpha in mi.monomials_up_to(n, degree)]
    rng = random.Random(session.seed)
    ideal = []
    for _ in range(samples):
        a, b = _random_weyl(rng, n, 2), _random_weyl(rng, n, 2)
        ideal.append(check("q-adic-left-ideal", weyl.q_adic_degree(a * b) >= weyl.q_adic_degree(b),
                           f"a={a!r} b={b!r}"))
    return [combine("oracle", oracle), combine("a_f-t-invariance", invariance),
            combine("q-adic-left-ideal", ideal)]


def _require_one_variable(session):
    if session.n_vars != 1:
        raise VariableCountError(1, session.n_vars)


def suite_C(session, samples):
    _require_one_variable(session)
    backend = _session_backend(session)
    elements = _basics(backend, _basic_bound(session))
    c2, c3 = [], []
    for a in elements:
        for b in elements:
            for n in range(min(confalg.locality_bound(a, b) + 1, 3) + 1):
                c2.append(confalg.check_C2(a, b, n))
                c3.append(confalg.check_C3(a, b, n))
    return [combine("C2", c2), combine("C3", c3)]


def suite_H(session, samples):
    backend = _session_backend(session)
    n = backend.n
    elements = _basics(backend, _basic_bound(session))
    hs = [HPoly.monomial(alpha) for alpha in mi.monomials_up_to(n, 1)]
    h2 = [confalg.check_H2(a, b, h, lam)
          for a in elements for b in elements for h in hs for lam in mi.monomials_up_to(n, 1)]
    rng = random.Random(session.seed)
    h0 = []
    for _ in range(max(samples // 10, 1)):
        a, b, c = (rng.choice(elements) for _ in range(3))
        f, g = _random_hpoly(rng, n, 2), _random_hpoly(rng, n, 2)
        h0.append(confalg.check_H0(a, b, c, f, g))
    return [combine("H0", h0), combine("H2", h2)]


def suite_A(session, samples):
    results = []
    for variety in operad.VARIETIES:
        a1 = [operad.check_A1(pi, tau, variety)
              for p in range(1, 5) for m in range(1, p + 1) for n in range(1, m + 1)
              for pi in operad.all_partitions(m, n) for tau in operad.all_partitions(p, m)]
        a2 = [operad.check_A2(n, variety) for n in range(1, 5)]
        a3 = [operad.check_A3(pi, variety) for m in range(1, 5) for n in range(1, m + 1)
              for pi in operad.all_partitions(m, n)]
        m3 = [operad.check_M3(n, variety) for n in range(1, 4)]
        dims = []
        for n in range(1, 6):
            expected = KNOWN_FREE_DIMS[n - 1] if variety == operad.FREE else operad.closed_form_dim(n, variety)
            dims.append(check("dim", operad.dim_CI(n, variety) == expected == operad.closed_form_dim(n, variety),
                              f"n={n}"))
        results.extend([combine(f"A1[{variety}]", a1), combine(f"A2[{variety}]", a2),
                        combine(f"A3[{variety}]", a3), combine(f"M3[{variety}]", m3),
                        combine(f"dim[{variety}]", dims)])
    return results


def suite_locality(session, samples):
    backend = _session_backend(session)
    elements = _basics(backend, _basic_bound(session))
    bounds = [confalg.check_locality_bound(a, b) for a in elements for b in elements]
    current = make_backend("cur", session.n_vars, max(session.matrix_size, 2))
    return [combine("locality-bound", bounds), confalg.check_current_table(current)]


def _check_certificate(a, b):
    result = fdist.locality_test(a, b)
    outer = fdist.outer_product(a, b)
    if result.local:
        return check("locality-certificate", outer.is_zero(), f"a={a!r} b={b!r}")
    key, value = result.certificate
    ok = not a.ring.is_zero(value) and a.ring.equal(outer.coefficient(key), value) and key == max(outer.coeffs)
    return check("locality-certificate", ok, f"a={a!r} b={b!r}")


def suite_res(session, samples):
    rng = random.Random(session.seed)
    rings = [make_ring("rational"), make_ring("matrix", size=max(session.matrix_size, 2)),
             make_ring("weyl", n=session.n_vars), make_ring("laurent")]
    results = []
    for ring in rings:
        c2, c3, bilinear, vanish, certificates, injective = [], [], [], [], [], []
        for _ in range(samples):
            a, b, c = (fdist.random_distribution(ring, rng) for _ in range(3))
            n = rng.randint(0, 4)
            c2.append(fdist.check_C2_res(a, b, n))
            c3.append(fdist.check_C3_res(a, b, n))
            bilinear.append(fdist.check_bilinear(a, b, c, n))
            vanish.append(fdist.check_local_products_vanish(a, b))
            certificates.append(_check_certificate(a, b))
            injective.append(fdist.check_mul_wz_injective(fdist.outer_product(a, b)))
        results.extend([combine(f"C2-res[{ring.name}]", c2), combine(f"C3-res[{ring.name}]", c3),
                        combine(f"res-bilinear[{ring.name}]", bilinear),
                        combine(f"local-products-vanish[{ring.name}]", vanish),
                        combine(f"locality-certificate[{ring.name}]", certificates),
                        combine(f"wz-injective[{ring.name}]", injective)])
    return results


def suite_lie(session, samples):
    rng = random.Random(session.seed)
    degree = min(session.degree_bound, 3)
    small = [HPoly.monomial(alpha) for alpha in mi.monomials_up_to(2, degree)]
    jacobi = [structures.check_jacobi(f, g, h) for f in small for g in small for h in small]
    big = [_random_hpoly(rng, 4, degree) for _ in range(3 * max(samples // 10, 1))]
    jacobi += [structures.check_jacobi(*big[k:k + 3]) for k in range(0, len(big) - 2, 3)]
    homomorphism = [structures.check_poisson_homomorphism(f, g) for f in small for g in small]
    hamiltonian = [structures.check_hamiltonian_consistency(f, g) for f in small for g in small]

    closure, derivations, forms = [], [], []
    for _ in range(max(samples // 10, 1)):
        f, g = _random_hpoly(rng, 2, degree), _random_hpoly(rng, 2, degree)
        d1, d2 = structures.hamiltonian_field(f), structures.hamiltonian_field(g)
        closure.append(structures.check_sn_closed(d1, d2))
        closure.append(structures.check_hn_closed(d1, d2))
        closure.append(check("hn-in-sn", structures.is_in_Sn(d1), repr(d1)))
        e1, e2, e3 = (_random_derivation(rng, 2, 2) for _ in range(3))
        derivations.append(structures.check_der_jacobi(e1, e2, e3))
        derivations.append(structures.check_leibniz(e1, f, g))
        derivations.append(structures.check_divergence_bracket(e1, e2))
        derivations.append(structures.check_weyl_encoding(e1, g))
        forms.append(structures.check_dd_zero(DifferentialForm(2, 1, {(1,): f, (2,): g})))

    matrices = []
    for _ in range(max(samples // 10, 1)):
        a, b = _random_matweyl(rng, 1, 2, 2), _random_matweyl(rng, 1, 2, 2)
        matrices.append(structures.check_skew_closed(a, b))
        matrices.append(structures.check_sym_closed(a, b))
    right_p = []
    for _ in range(samples // 2):
        a = _random_matweyl(rng, 2, 2, 2)
        for i in (1, 2):
            right_p.append(check("right-p-identity", weyl.check_right_p_identity(a, i), f"a={a!r} i={i}"))
    wn = [structures.check_wn_t_invariance(i, alpha) for i in (1, 2) for alpha in mi.monomials_up_to(2, 2)]
    return [combine("jacobi", jacobi), combine("poisson-homomorphism", homomorphism),
            combine("hamiltonian", hamiltonian), combine("sn-hn-closure", closure),
            combine("derivations", derivations), combine("dd-zero", forms),
            combine("skew-sym-closure", matrices), combine("right-p-identity", right_p),
            combine("wn-t-invariance", wn)]


def suite_structures(session, samples):
    """Extension to more variables and matrix embeddings of scalar elements, on both backends."""
    rng = random.Random(session.seed)
    degree = min(session.degree_bound, 2)
    extension, embedding = [], []
    for name in ("cend", "cur"):
        for r, n in ((1, 2), (1, 3), (2, 3)):
            backend = make_backend(name, r, 1)
            for _ in range(max(samples // 20, 1)):
                a = confalg.random_element(backend, rng, support=2, degree=degree)
                extension.append(structures.check_poly_extension(a, n, degree=degree + 1))
        scalar = make_backend(name, 1, 1)
        for _ in range(max(samples // 20, 1)):
            a, b = (confalg.random_element(scalar, rng, support=2, degree=degree) for _ in range(2))
            f = _random_hpoly(rng, 1, degree)
            for position in (None, (1, 1), (2, 2)):
                embedding.append(structures.check_matrix_embed(a, b, f, 2, position))
    return [combine("poly-extension", extension), combine("matrix-embed", embedding)]

def suite_tc_witness(session, samples):
    backend = _session_backend(session)
    n, size = backend.n, backend.size
    degree = min(session.degree_bound, 3)
    targets = []
    for _, _, unit in linalg.all_units(size):
        for alpha in mi.monomials_up_to(n, degree):
            if backend.name == "cend":
                targets += [MatWeyl.from_scalar_matrix(unit, WeylElement.monomial(beta, alpha))
                            for beta in mi.monomials_up_to(n, degree - mi.degree(alpha))]
            else:
                targets.append(backend.basic_value(mi.zero(n), unit, alpha))
    return [combine("tc-witness", [confalg.check_tc_witness(backend, target) for target in targets])]


def suite_evaluation(session, samples):
    backend = _session_backend(session)
    rng = random.Random(session.seed)
    degree = min(session.degree_bound, 2)
    results = []
    for _ in range(samples):
        a = confalg.random_element(backend, rng, support=2, degree=degree)
        b = confalg.random_element(backend, rng, support=2, degree=degree)
        f, g = _random_hpoly(rng, backend.n, degree, 2), _random_hpoly(rng, backend.n, degree, 2)
        results.append(confalg.check_evaluation_identity(a, b, f, g))
    return [combine("evaluation-identity", results)]


def suite_roundtrip(session, samples):
    backend = _session_backend(session)
    rng = random.Random(session.seed)
    return [combine("roundtrip", [confalg.check_roundtrip(confalg.random_element(backend, rng,
                                                                               degree=session.degree_bound))
                                  for _ in range(max(samples // 2, 1))])]


SUITES = {
    "hopf": suite_hopf,
    "weyl": suite_weyl,
    "C": suite_C,
    "H": suite_H,
    "A": suite_A,
    "locality": suite_locality,
    "res": suite_res,
    "lie": suite_lie,
    "structures": suite_structures,
    "tc-witness": suite_tc_witness,
    "evaluation": suite_evaluation,
    "roundtrip": suite_roundtrip,
}
ALIASES = {"poisson": "lie"}


def suite_names():
    return sorted(set(SUITES) | set(ALIASES) | {"all"})


def expand(name):
    """The suites a name stands for; 'all' runs every suite in declaration order.

    Raises:
        KeyError: For an unknown suite name.
    """
    if name == "all":
        return list(SUITES)
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return [name]


def run_suite(name, session, samples=None):
    """Run one suite (not 'all') and return its results in a fixed order."""
    samples = DEFAULT_SAMPLES if samples is None else samples
    (name,) = expand(name)
    logger.info("suite %s started (seed=%d, samples=%d)", name, session.seed, samples)
    results = SUITES[name](session, samples)
    failures = sum(1 for result in results if not result.passed)
    logger.info("suite %s finished: %d identities, %d failed", name, len(results), failures)
    return results
