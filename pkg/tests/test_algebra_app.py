import pytest

from tc_algebra import suites
from tc_algebra.algebra_app import AlgebraApp
from tc_algebra.config import SessionConfig
from tc_algebra.errors import ArityError, EvaluationError, ParseError, VariableCountError
from tc_algebra.operad import Perm
from tc_algebra.output_formatter import format_value
from tc_algebra.report import failed, passed
from tc_algebra.storage import make_report_storage


@pytest.fixture
def app(session):
    return AlgebraApp(session)


def _text(report):
    return format_value(report.result)


def test_command_table(app):
    assert list(app.commands()) == ["simplify", "eval", "fprod", "nprod", "locality", "res-nprod", "check",
                                    "operad compose", "operad act", "dim"]
    with pytest.raises(KeyError):
        app.run("nope")


def test_simplify(app):
    report = app.run("simplify", expression="q1*p1")
    assert report.command == "simplify q1*p1"
    assert _text(report) == "p1*q1 + 1"
    assert report.checks == [] and report.exit_code == 0


def test_conformal_commands(app):
    assert _text(app.run("fprod", left="a[1]", right="a[p1]", polynomial="T1")) == "a[1]"
    assert _text(app.run("nprod", left="a[1]", right="a[1]", n=0)) == "a[1]"
    assert _text(app.run("nprod", left="a[1]", right="a[1]", n=1)) == "0"
    assert _text(app.run("eval", element="T1 . a[p1]", polynomial="T1^2")) == "-2*p1*q1"


def test_locality_attaches_the_bound_check(app):
    report = app.run("locality", left="a[1]", right="a[p1]")
    assert _text(report) == "{0,1}"
    assert [check.name for check in report.checks] == ["locality-bound"]
    assert report.passed


def test_locality_of_distributions(app):
    report = app.run("locality", left="z^-1", right="z^-1")
    assert _text(report) == "not local: w^-1*z^-1 coefficient is nonzero"
    assert report.checks == []


def test_residue_products(app):
    report = app.run("res-nprod", left="z^-1", right="2*z^-1", n=1)
    assert report.command == "res-nprod z^-1 2*z^-1 1"
    assert _text(report) == "-2"


def test_arguments_are_checked(app):
    with pytest.raises(ParseError):
        app.run("fprod", left="a[1]", right="T1", polynomial="T1")
    with pytest.raises(EvaluationError):
        app.run("simplify", expression="a[1]*a[1]")


def test_n_products_need_one_variable(session_n2):
    with pytest.raises(VariableCountError):
        AlgebraApp(session_n2).run("nprod", left="a[1]", right="a[1]", n=0)


def test_check_prefixes_suite_names(monkeypatch, app):
    monkeypatch.setitem(suites.SUITES, "hopf", lambda session, samples: [passed("one"), failed("two", "x")])
    report = app.run("check", suite="hopf", samples=1)
    assert [check.name for check in report.checks] == ["hopf/one", "hopf/two"]
    assert report.exit_code == 1


def test_parallel_check_keeps_suite_order(monkeypatch, session):
    for name in suites.SUITES:
        monkeypatch.setitem(suites.SUITES, name, lambda session, samples, name=name: [passed(name)])
    report = AlgebraApp(session.override(jobs=4)).run("check", suite="all")
    assert [check.name for check in report.checks] == [f"{name}/{name}" for name in suites.SUITES]


def test_check_all_skips_n_products_for_several_variables(monkeypatch, session_n2):
    for name in suites.SUITES:
        monkeypatch.setitem(suites.SUITES, name, lambda session, samples, name=name: [passed(name)])
    report = AlgebraApp(session_n2).run("check", suite="all")
    assert "C/C" not in [check.name for check in report.checks]
    assert len(report.checks) == len(suites.SUITES) - 1


def test_operad_commands(app):
    report = app.run("operad compose", outer="x1 x2", inner=["x1 x2", "x1"])
    assert report.command == "operad compose x1 x2 x1 x2 x1"
    assert _text(report) == "(x1 x2) x3"
    assert _text(app.run("operad act", sigma=Perm([2, 1, 3]), element="(x1 x2) x3")) == "(x2 x1) x3"
    with pytest.raises(ArityError):
        app.run("operad compose", outer="x1 x2", inner=["x1"])


def test_assoc_variety(session):
    app = AlgebraApp(session.override(variety="assoc"))
    assert _text(app.run("operad compose", outer="x2 x1", inner=["x1 x2", "x1"])) == "x3 x1 x2"
    assert app.run("dim", arity=4).result == 24


def test_dimension(app):
    report = app.run("dim", arity=3)
    assert report.command == "dim --variety free --arity 3"
    assert report.result == 12


def test_reports_are_stored(tmp_path, session):
    storage = make_report_storage(str(tmp_path / "log.json"))
    app = AlgebraApp(session, storage)
    app.run("dim", arity=2)
    app.run("simplify", expression="1/2 + 1/2")
    assert [r["command"] for r in storage.list_reports()] == ["dim --variety free --arity 2", "simplify 1/2 + 1/2"]
