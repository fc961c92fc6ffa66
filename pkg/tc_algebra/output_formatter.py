"""Textual and JSON forms of every value the command line can print.

Orderings are graded-lex everywhere so that two runs print the same bytes.
Rationals travel through JSON as "p/q" strings.
"""
import json
from fractions import Fraction
from math import inf

from tc_algebra import multiindex as mi
from tc_algebra.confalg import ConformalElement
from tc_algebra.fdist import BiDistribution, FormalDistribution, LocalityResult
from tc_algebra.hopf import DualPoly, HPoly, HTensor
from tc_algebra.laurent import LaurentPoly
from tc_algebra.operad import OperadElt, Partition, Perm, format_tree
from tc_algebra.report import CheckResult, Report
from tc_algebra.structures import DifferentialForm, PolyDerivation
from tc_algebra.weyl import HVector, MatWeyl, PolyMatrix, WeylElement


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(exponents, prefix):
    """`T1^2*T2` for prefix T; empty string for the zero exponent."""
    factors = []
    for i, e in enumerate(exponents, start=1):
        if e == 1:
            factors.append(f"{prefix}{i}")
        elif e > 1:
            factors.append(f"{prefix}{i}^{e}")
    return "*".join(factors)


def join_terms(terms):
    """Join (coefficient, monomial text) pairs with signs; an empty monomial is the unit."""
    pieces = []
    for c, monomial in terms:
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if not monomial:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_rational(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces) if pieces else "0"


def format_hpoly(f):
    return join_terms((c, format_monomial(alpha, "T")) for alpha, c in f.sorted_items())


def format_dual(x):
    return join_terms((c, format_monomial(lam, "t")) for lam, c in x.sorted_items())


def format_weyl(a):
    return join_terms((c, "*".join(part for part in (format_monomial(beta, "p"), format_monomial(alpha, "q")) if part))
                      for (beta, alpha), c in a.sorted_items())


def _leg(alpha):
    return format_monomial(alpha, "T") or "1"


def format_tensor(u):
    """`2*T1 (x) 1 - 1 (x) T1`; a unit first leg carries the bare coefficient."""
    pieces = []
    for key, c in u.sorted_items():
        legs = [_leg(alpha) for alpha in key]
        head = format_rational(c) if legs[0] == "1" else _times(format_rational(c), legs[0])
        pieces.append(" (x) ".join([head] + legs[1:]))
    return _join_signed(pieces)


def _is_compound(text):
    body = text[1:] if text.startswith("-") else text
    return " + " in body or " - " in body


def format_matrix(rows, entry=None):
    entry = entry or format_value
    return "[" + ", ".join("[" + ", ".join(entry(x) for x in row) + "]" for row in rows) + "]"


def format_laurent(x):
    pieces = []
    for k, c in x.sorted_items():
        monomial = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        pieces.append((c, monomial))
    return join_terms(pieces)


def _times(coefficient_text, monomial):
    """coefficient * monomial, omitting a unit coefficient and wrapping compound ones."""
    if not monomial:
        return coefficient_text
    if coefficient_text == "1":
        return monomial
    if coefficient_text == "-1":
        return f"-{monomial}"
    if _is_compound(coefficient_text):
        coefficient_text = f"({coefficient_text})"
    return f"{coefficient_text}*{monomial}"


def _join_signed(pieces):
    text = ""
    for piece in pieces:
        if not text:
            text = piece
        elif piece.startswith("-"):
            text += f" - {piece[1:]}"
        else:
            text += f" + {piece}"
    return text or "0"


def _power(var, k):
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def format_distribution(a):
    ring = a.ring
    return _join_signed(_times(ring.format(x), _power("z", k)) for k, x in a.sorted_items())


def format_bidistribution(x):
    ring = x.ring
    return _join_signed(_times(ring.format(value), "*".join(p for p in (_power("w", j), _power("z", k)) if p))
                        for (j, k), value in x.sorted_items())


def _format_index(alpha):
    return str(alpha[0]) if len(alpha) == 1 else "(" + ",".join(str(a) for a in alpha) + ")"


def format_locality_set(lams):
    return "{" + ",".join(_format_index(lam) for lam in sorted(lams, key=lambda lam: (sum(lam), lam))) + "}"


def _conformal_summand(backend, gamma, beta, matrix):
    p_part = format_monomial(beta, "p") or "1"
    if backend.size == 1:
        c = matrix[0][0]
        inner = f"a[{p_part}]"
        if any(gamma):
            h = format_hpoly(HPoly(len(gamma), {gamma: c}))
            return f"{h} . {inner}"
        return _times(format_rational(c), inner)
    inner = f"a[{p_part}; {format_matrix(matrix, format_rational)}]"
    if any(gamma):
        return f"{format_monomial(gamma, 'T')} . {inner}"
    return inner


def format_conformal(c):
    return _join_signed(_conformal_summand(c.backend, gamma, beta, matrix)
                        for (gamma, beta), matrix in c.sorted_items())


def format_derivation(d):
    pieces = []
    for i, f in enumerate(d.components, start=1):
        if f:
            pieces.append(_times(format_hpoly(f), f"d{i}"))
    return _join_signed(pieces)


def format_form(form):
    pieces = []
    for indices, f in form.sorted_items():
        wedge = "^".join(f"dT{i}" for i in indices)
        text = format_hpoly(f)
        pieces.append(f"({text}) {wedge}" if _is_compound(text) else f"{text} {wedge}")
    return _join_signed(pieces)


def format_operad(f):
    pieces = []
    for key, c in f.sorted_items():
        word = format_tree(key)
        if f.arity > 1:
            word = f"({word})" if Fraction(c) != 1 else word
        pieces.append(_times(format_rational(c), word))
    return _join_signed(pieces)


def format_locality(result):
    if result.local:
        return f"local (N={result.order})"
    (j, k), _ = result.certificate
    return f"not local: w^{j}*z^{k} coefficient is nonzero"


def format_check(result):
    status = "PASS" if result.passed else "FAIL"
    text = f"{status} {result.name}"
    if result.detail:
        text += f" ({result.detail})"
    if not result.passed and result.counterexample:
        text += f": {result.counterexample}"
    return text


def format_value(value):
    """Canonical text of any value the library produces."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, float) and value == inf:
        return "inf"
    if isinstance(value, HPoly):
        return format_hpoly(value)
    if isinstance(value, DualPoly):
        return format_dual(value)
    if isinstance(value, HTensor):
        return format_tensor(value)
    if isinstance(value, WeylElement):
        return format_weyl(value)
    if isinstance(value, (MatWeyl, PolyMatrix)):
        return format_matrix(value.rows)
    if isinstance(value, HVector):
        return "(" + ", ".join(format_hpoly(f) for f in value.entries) + ")"
    if isinstance(value, ConformalElement):
        return format_conformal(value)
    if isinstance(value, FormalDistribution):
        return format_distribution(value)
    if isinstance(value, BiDistribution):
        return format_bidistribution(value)
    if isinstance(value, LocalityResult):
        return format_locality(value)
    if isinstance(value, PolyDerivation):
        return format_derivation(value)
    if isinstance(value, DifferentialForm):
        return format_form(value)
    if isinstance(value, OperadElt):
        return format_operad(value)
    if isinstance(value, (Perm, Partition)):
        items = value.images if isinstance(value, Perm) else value.parts
        return "[" + ",".join(str(x) for x in items) + "]"
    if isinstance(value, CheckResult):
        return format_check(value)
    if isinstance(value, frozenset):
        return format_locality_set(value)
    if isinstance(value, LaurentPoly):
        return format_laurent(value)
    if isinstance(value, tuple) and value and all(isinstance(row, tuple) for row in value):
        return format_matrix(value, format_rational)
    if isinstance(value, list):
        return "\n".join(format_value(item) for item in value)
    if isinstance(value, tuple):
        return "(" + ", ".join(format_value(item) for item in value) + ")"
    return str(value)


def _matrix_json(matrix):
    return [[format_rational(x) for x in row] for row in matrix]


def to_jsonable(value):
    """A JSON-ready structure; structured for conformal elements, text otherwise."""
    if isinstance(value, ConformalElement):
        return {
            "type": "conformal",
            "backend": value.backend.name,
            "n": value.backend.n,
            "N": value.backend.size,
            "terms": [{"gamma": list(gamma), "beta": list(beta), "matrix": _matrix_json(matrix)}
                      for (gamma, beta), matrix in value.sorted_items()],
        }
    if isinstance(value, frozenset):
        return {"type": "locality-set", "elements": [list(lam) for lam in sorted(value, key=lambda lam: (sum(lam), lam))],
                "text": format_value(value)}
    if isinstance(value, bool):
        return value
    if isinstance(value, list):
        return [to_jsonable(item) for item in value]
    if isinstance(value, tuple) and not (value and all(isinstance(row, tuple) for row in value)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if value is None:
        return None
    return {"type": type(value).__name__, "text": format_value(value)}


def check_to_dict(result):
    return {"name": result.name, "passed": result.passed, "detail": result.detail,
            "counterexample": result.counterexample}


def report_to_dict(report):
    return {
        "schema_version": report.schema_version,
        "command": report.command,
        "result": to_jsonable(report.result),
        "checks": [check_to_dict(result) for result in report.checks],
        "passed": report.passed,
    }


def to_json(value):
    if isinstance(value, Report):
        return json.dumps(report_to_dict(value), indent=2)
    return json.dumps(to_jsonable(value), indent=2)


def format_report(report):
    """Result text followed by one line per checked identity."""
    lines = []
    if report.result is not None:
        lines.append(format_value(report.result))
    lines.extend(format_check(result) for result in report.checks)
    return "\n".join(lines)
