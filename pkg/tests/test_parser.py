from fractions import Fraction

import pytest

from tc_algebra import hopf, structures
from tc_algebra.backends import make_backend
from tc_algebra.confalg import ConformalElement
from tc_algebra.config import SessionConfig
from tc_algebra.errors import (DimensionMismatchError, EvaluationError, ParseError, SubLanguageError,
                               UnknownIdentifierError)
from tc_algebra.hopf import HPoly
from tc_algebra.output_formatter import format_value
from tc_algebra.parser import CONF, DIST, HOPF, LIE, SCALAR, WEYL, Evaluator, format_expr, make_call, parse, tokenize


def test_tokens_carry_positions():
    tokens = tokenize("T1 + 2/3")
    assert [(t.kind, t.text, t.column) for t in tokens] == [
        ("ident", "T1", 1), ("op", "+", 4), ("number", "2/3", 6), ("end", "", 9)]


def test_positions_count_lines():
    plus = tokenize("T1\n  + p1")[1]
    assert (plus.line, plus.column) == (2, 3)


def test_tensor_sign_is_one_token():
    assert [t.kind for t in tokenize("T1 (x) T2")] == ["ident", "tensor", "ident", "end"]


def test_unexpected_character():
    with pytest.raises(ParseError) as info:
        tokenize("T1 $ T2")
    assert (info.value.line, info.value.column) == (1, 4)


@pytest.mark.parametrize("source, column", [("T1 +", 5), ("(T1", 4), ("T1 T2", 4), ("", 1), ("T1^1/2", 4)])
def test_syntax_errors_report_the_column(source, column):
    with pytest.raises(ParseError) as info:
        parse(source)
    assert info.value.column == column


@pytest.mark.parametrize("source, lang", [
    ("3/4", SCALAR),
    ("T1^2 - 1", HOPF),
    ("t1^3 . T1", HOPF),
    ("T1 (x) T2", HOPF),
    ("p1*q1 + 1", WEYL),
    ("[[p1, 0], [0, 1]]", WEYL),
    ("T1*d1 + d2", LIE),
    ("z^-1 + 2*z", DIST),
    ("q1*z", DIST),
    ("T1 . a[p1]", CONF),
    ("a[p1^2; [[0, 1], [0, 0]]]", CONF),
    ("{T1, T2}", HOPF),
    ("eval(a[1], T1)", WEYL),
    ("locality(a[1], a[p1])", CONF),
    ("delta_iter(T1, 2)", HOPF),
    ("augdeg(T1)", SCALAR),
    ("qdeg(p1*q1)", SCALAR),
    ("dq(q1^2, 1)", WEYL),
    ("rep(q1, T1^2)", HOPF),
    ("ideal(p1, T1)", WEYL),
    ("wn(1, T1^2)", WEYL),
    ("in_S(T1*d1)", SCALAR),
    ("extend(a[p1], 2)", CONF),
])
def test_sub_languages(source, lang):
    assert parse(source).lang == lang


@pytest.mark.parametrize("source", ["T1 + p1", "p1*T1", "p1 . a[1]", "a[T1]", "sigma(T1)", "{p1, q1}",
                                    "T1 (x) p1", "a[p1; p1]", "rep(T1, T1)", "wn(1, p1)", "in_S(T1)"])
def test_mixing_sub_languages_is_refused(source):
    with pytest.raises(SubLanguageError):
        parse(source)


@pytest.mark.parametrize("source", ["x1 + 1", "foo(T1)", "T0", "w"])
def test_unknown_identifiers(source):
    with pytest.raises(UnknownIdentifierError):
        parse(source)


def test_call_arity():
    with pytest.raises(ParseError):
        parse("S(T1, T1)")


def test_non_square_matrix():
    with pytest.raises(ParseError):
        parse("[[1, 2]]")


def test_indices_are_checked_against_the_session():
    parse("T2")
    with pytest.raises(ParseError):
        parse("T2", SessionConfig())
    assert parse("T2", SessionConfig(n_vars=2)).lang == HOPF


def test_evaluation_lands_in_H_for_current_algebras():
    assert parse("eval(a[1], T1)", SessionConfig(backend="cur")).lang == HOPF


def test_make_call_builds_checked_nodes():
    node = make_call("S", [parse("T1")])
    assert node.kind == "call" and node.lang == HOPF and node.value == "S"
    with pytest.raises(UnknownIdentifierError):
        make_call("nope", [])
    with pytest.raises(SubLanguageError):
        make_call("sigma", [parse("T1")])
    with pytest.raises(ParseError) as info:
        make_call("S", [])
    assert "line" not in str(info.value)


@pytest.mark.parametrize("source", [
    "T1^2*T2 - 1/2",
    "-T1^2",
    "(-T1)^2",
    "T1 - (T2 - 1)",
    "-(T1 + 1)",
    "T1*(T2 + 1)",
    "2*T1 . a[p1]",
    "T1 (x) T1 + 1 (x) 1",
    "[[q1, 0], [0, 1]]*[[p1, 0], [0, 1]]",
    "[([[p1]]), q1]",
    "{T1, T2}",
    "fprod(a[1], a[p1], T1)",
    "z^-1 + 2*z^3",
    "a[p1^2; [[0, 1], [0, 0]]]",
    "res(z^-1, 2*z^-1, 1)",
])
def test_canonical_text_round_trips(source):
    node = parse(source)
    assert format_expr(node) == source
    assert parse(format_expr(node)) == node


def test_redundant_parentheses_are_dropped():
    assert format_expr(parse("((T1)) + (2*T2)")) == "T1 + 2*T2"


def test_number_literals_are_exact():
    assert parse("6/4").value == Fraction(3, 2)


def test_evaluator_rejects_ill_typed_operands():
    evaluator = Evaluator(SessionConfig())
    with pytest.raises(EvaluationError):
        evaluator.evaluate(parse("nprod(a[1], a[1], 1/2)"))
    with pytest.raises(EvaluationError):
        evaluator.evaluate(parse("T1^-1"))


@pytest.mark.parametrize("source, n_vars, expected", [
    ("augdeg(T1*T2 + T1^3)", 2, "2"),
    ("augdeg(0)", 1, "inf"),
    ("dq(p1*q1^2, 1)", 1, "2*p1*q1"),
    ("qdeg(p1*q1^2 + q1)", 1, "1"),
    ("qdeg(p1)", 1, "0"),
    ("rep(q1, T1^3)", 1, "3*T1^2"),
    ("rep(p1*q1, T1^2)", 1, "2*T1^2"),
    ("rep([[q1, 0], [0, p1]], [[T1^2, 0], [1, 0]])", 1, "[[2*T1, 0], [T1, 0]]"),
    ("ideal(p1, T1)", 1, "[[p1^2]]"),
    ("wn(1, T1^2)", 1, "p1^2*q1"),
    ("in_S(ham(T1*T2))", 2, "true"),
    ("in_S(T1*d1)", 2, "false"),
    ("in_H(ham(T1^2))", 2, "true"),
    ("in_H(T1*d1)", 2, "false"),
])
def test_structure_calls_evaluate(source, n_vars, expected):
    session = SessionConfig(n_vars=n_vars)
    assert format_value(Evaluator(session).evaluate(parse(source, session))) == expected


def test_iterated_coproduct_call():
    value = Evaluator(SessionConfig()).evaluate(parse("delta_iter(T1, 2)"))
    assert value == hopf.iterated_coproduct(HPoly.variable(1, 1), 2)
    assert value.arity == 3


def test_wn_call_is_linear_in_the_polynomial():
    value = Evaluator(SessionConfig(n_vars=2)).evaluate(parse("wn(2, 2*T1 + 1)"))
    assert value == structures.wn_basic_map(2, (1, 0)).scale(2) + structures.wn_basic_map(2, (0, 0))


def test_embed_and_extend_calls():
    evaluator = Evaluator(SessionConfig())
    scalar = make_backend("cend", 1, 1)
    c = ConformalElement.basic(scalar, beta=(1,))
    assert evaluator.evaluate(parse("embed(a[p1], 2)")) == structures.matrix_tc_embed(c, 2)
    assert evaluator.evaluate(parse("extend(a[p1], 2)")) == structures.poly_extension(c, 2)
    assert evaluator.evaluate(parse("extend(a[p1], 2)")).backend == make_backend("cend", 2, 1)


def test_embedding_needs_scalar_coefficients():
    with pytest.raises(DimensionMismatchError):
        Evaluator(SessionConfig(matrix_size=2)).evaluate(parse("embed(a[1], 2)"))
