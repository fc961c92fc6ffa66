import json
from fractions import Fraction
from math import inf

from tc_algebra import linalg
from tc_algebra.backends import make_backend
from tc_algebra.confalg import ConformalElement
from tc_algebra.fdist import BiDistribution, FormalDistribution
from tc_algebra.hopf import HPoly, HTensor
from tc_algebra.operad import FREE, OperadElt, Perm
from tc_algebra.output_formatter import format_report, format_value, report_to_dict, to_json, to_jsonable
from tc_algebra.report import Report, failed, passed
from tc_algebra.rings import MatrixRing, RationalRing
from tc_algebra.structures import DifferentialForm, PolyDerivation
from tc_algebra.weyl import MatWeyl, WeylElement


def test_scalars():
    assert format_value(Fraction(-1, 2)) == "-1/2"
    assert format_value(Fraction(4, 2)) == "2"
    assert format_value(True) == "true"
    assert format_value(inf) == "inf"


def test_polynomials_in_graded_lex_order():
    f = HPoly(2, {(0, 1): Fraction(-1, 2), (0, 0): 3, (1, 0): 1, (1, 1): 1})
    assert format_value(f) == "T1*T2 + T1 - 1/2*T2 + 3"
    assert format_value(HPoly(2)) == "0"


def test_weyl_elements_put_p_before_q():
    a = WeylElement(2, {((1, 0), (0, 2)): -2, ((0, 0), (0, 0)): 1})
    assert format_value(a) == "-2*p1*q2^2 + 1"


def test_tensors():
    u = HTensor(1, 2, {((1,), (0,)): 2, ((0,), (1,)): -1})
    assert format_value(u) == "2*T1 (x) 1 - 1 (x) T1"


def test_matrices_of_weyl_elements():
    p1 = WeylElement.p(1, 1)
    assert format_value(MatWeyl.scalar(p1, 2)) == "[[p1, 0], [0, p1]]"
    assert format_value(linalg.matrix_unit(1, 2, 2)) == "[[0, 1], [0, 0]]"


def test_conformal_elements():
    scalar = make_backend("cend", 1, 1)
    c = ConformalElement.basic(scalar, beta=(2,)).scale(3) + ConformalElement.basic(scalar, gamma=(1,))
    assert format_value(c) == "T1 . a[1] + 3*a[p1^2]"
    matrix = make_backend("cend", 1, 2)
    e = ConformalElement.basic(matrix, beta=(1,), matrix=linalg.matrix_unit(1, 2, 2), gamma=(2,))
    assert format_value(e) == "T1^2 . a[p1; [[0, 1], [0, 0]]]"
    assert format_value(ConformalElement.zero(scalar)) == "0"


def test_distributions():
    qq = RationalRing()
    a = FormalDistribution(qq, {-1: Fraction(1), 2: Fraction(-3)})
    assert format_value(a) == "z^-1 - 3*z^2"
    x = BiDistribution(qq, {(1, 0): 1, (0, 1): -1})
    assert format_value(x) == "-z + w"
    m = FormalDistribution(MatrixRing(2), {0: ((1, 0), (0, 1))})
    assert format_value(m) == "[[1, 0], [0, 1]]"


def test_locality_sets_and_results():
    assert format_value(frozenset({(1,), (0,)})) == "{0,1}"
    assert format_value(frozenset({(0, 1), (0, 0)})) == "{(0,0),(0,1)}"


def test_derivations_and_forms():
    t1, t2 = HPoly.variable(1, 2), HPoly.variable(2, 2)
    assert format_value(PolyDerivation([-t1, t2 + 1])) == "-T1*d1 + (T2 + 1)*d2"
    assert format_value(DifferentialForm(2, 2, {(1, 2): t1 + 1})) == "(T1 + 1) dT1^dT2"


def test_operad_values():
    f = OperadElt(FREE, 2, {(1, 2): 1, (2, 1): -1})
    assert format_value(f) == "x1 x2 - (x2 x1)"
    assert format_value(Perm([2, 1, 3])) == "[2,1,3]"


def test_conformal_json_lists_gamma_beta_and_matrix():
    backend = make_backend("cend", 1, 2)
    c = ConformalElement.basic(backend, beta=(1,), matrix=((0, Fraction(1, 2)), (0, 0)), gamma=(1,))
    assert to_jsonable(c) == {
        "type": "conformal", "backend": "cend", "n": 1, "N": 2,
        "terms": [{"gamma": [1], "beta": [1], "matrix": [["0", "1/2"], ["0", "0"]]}],
    }


def test_other_values_travel_as_text():
    assert to_jsonable(HPoly.variable(1, 1)) == {"type": "HPoly", "text": "T1"}
    assert to_jsonable(Fraction(1, 3)) == {"type": "Fraction", "text": "1/3"}
    assert to_jsonable(12) == 12
    assert to_jsonable(None) is None


def test_reports():
    report = Report("check hopf", None, [passed("coassoc", "5 cases"), failed("antipode", "f=T1")])
    assert format_report(report) == "PASS coassoc (5 cases)\nFAIL antipode: f=T1"
    assert report.exit_code == 1
    data = json.loads(to_json(report))
    assert data == report_to_dict(report)
    assert data["passed"] is False
    assert data["checks"][1] == {"name": "antipode", "passed": False, "detail": "", "counterexample": "f=T1"}


def test_report_with_a_result_prints_it_first():
    report = Report("dim --variety free --arity 3", 12)
    assert format_report(report) == "12"
    assert report.exit_code == 0
