import pytest

from tc_algebra.config import SessionConfig


def test_defaults():
    session = SessionConfig.from_env({})
    assert session == SessionConfig()
    assert (session.n_vars, session.matrix_size, session.backend, session.variety) == (1, 1, "cend", "free")


def test_environment_values_are_converted():
    session = SessionConfig.from_env({
        "TC_ALGEBRA_N": "2",
        "TC_ALGEBRA_MATRIX_SIZE": "3",
        "TC_ALGEBRA_BACKEND": "CUR",
        "TC_ALGEBRA_LOG_LEVEL": "debug",
        "TC_ALGEBRA_REPORT_LOG": "reports.json",
        "TC_ALGEBRA_SEED": "",
    })
    assert session.n_vars == 2 and session.matrix_size == 3
    assert session.backend == "cur"
    assert session.log_level == "DEBUG"
    assert session.report_log == "reports.json"
    assert session.seed == 0


def test_malformed_numbers_raise():
    with pytest.raises(ValueError):
        SessionConfig.from_env({"TC_ALGEBRA_N": "two"})


def test_override_ignores_unset_flags():
    session = SessionConfig(n_vars=2).override(n_vars=None, backend="cur", jobs=4)
    assert session == SessionConfig(n_vars=2, backend="cur", jobs=4)


def test_reads_the_process_environment(monkeypatch):
    monkeypatch.setenv("TC_ALGEBRA_VARIETY", "assoc")
    assert SessionConfig.from_env().variety == "assoc"
