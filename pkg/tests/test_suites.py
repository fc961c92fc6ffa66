import pytest

from tc_algebra import suites
from tc_algebra.config import SessionConfig
from tc_algebra.errors import VariableCountError

SMALL = SessionConfig(degree_bound=2, seed=3)


@pytest.mark.parametrize("name", sorted(suites.SUITES))
def test_every_suite_passes_on_a_small_session(name):
    results = suites.run_suite(name, SMALL, samples=6)
    assert results
    failures = [result for result in results if not result.passed]
    assert not failures, failures


@pytest.mark.parametrize("name", ["C", "H", "locality", "tc-witness", "evaluation", "roundtrip"])
def test_conformal_suites_with_matrix_coefficients(name):
    session = SMALL.override(matrix_size=2, degree_bound=1)
    assert all(suites.run_suite(name, session, samples=4))


@pytest.mark.parametrize("name", ["H", "tc-witness", "evaluation", "roundtrip"])
def test_current_algebra_backend(name):
    session = SMALL.override(backend="cur", matrix_size=2, n_vars=2, degree_bound=1)
    assert all(suites.run_suite(name, session, samples=4))


def test_n_products_need_one_variable():
    with pytest.raises(VariableCountError):
        suites.run_suite("C", SMALL.override(n_vars=2), samples=1)


def test_results_are_reproducible_for_a_seed():
    first = suites.run_suite("res", SMALL, samples=5)
    second = suites.run_suite("res", SMALL, samples=5)
    assert first == second


def test_names_and_aliases():
    assert suites.expand("poisson") == ["lie"]
    assert suites.expand("all") == list(suites.SUITES)
    assert "all" in suites.suite_names() and "poisson" in suites.suite_names()
    with pytest.raises(KeyError):
        suites.expand("nope")
    with pytest.raises(ValueError):
        suites.run_suite("all", SMALL)


def test_structures_suite_covers_extension_and_embedding():
    results = suites.run_suite("structures", SMALL, samples=20)
    assert [result.name for result in results] == ["poly-extension", "matrix-embed"]
    assert all(results)
    assert "structures" in suites.expand("all")
